import sys
from typing import Any, TextIO

from isocompress.enuns.output_mode import OutputMode


class Reporter:
    """
    Prints results on stdout, either readable or as key=value lines.

    In LINES mode every result is one line starting with 'result=<name>',
    followed by its fields in the given order, so equal runs print equal bytes.

    Attributes
    ----------
    __mode : OutputMode
        The output mode.
    __stream : TextIO
        Where results go.
    """

    def __init__(self, mode: OutputMode = OutputMode.HUMAN, stream: TextIO | None = None):
        """
        Initialize the Reporter.

        Parameters
        ----------
        mode : OutputMode, optional
            The output mode (default is OutputMode.HUMAN).
        stream : TextIO | None, optional
            The target stream (default is sys.stdout at emit time).
        """
        self.__mode = mode
        self.__stream = stream

    def emit(self, name: str, fields: dict[str, Any]) -> None:
        """
        Prints one result.

        Parameters
        ----------
        name : str
            The result kind, e.g. 'compress'.
        fields : dict[str, Any]
            The values, printed in insertion order.
        """
        stream = self.__stream or sys.stdout
        if self.__mode is OutputMode.LINES:
            pairs = [f"result={name}"] + [f"{key}={format_value(value)}" for key, value in fields.items()]
            print(" ".join(pairs), file=stream)
            return

        print(f"{name}:", file=stream)
        for key, value in fields.items():
            print(f"  {key}: {format_value(value)}", file=stream)


def format_value(value: Any) -> str:
    """Renders a field: floats with 10 significant digits, booleans lower-case, sequences comma-separated."""
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, float):
        return f"{value:.10g}"
    if isinstance(value, (list, tuple, frozenset, set)):
        items = sorted(value) if isinstance(value, (set, frozenset)) else value
        return "{" + ",".join(format_value(item) for item in items) + "}"
    if value is None:
        return "-"

    return str(value)
