import os

from isocompress.errors import ConfigError, IngestError


def is_empty(value: str, error_message: str) -> str:
    """
    Checks if the value is empty.

    Parameters
    ----------
    value : str
        The value to be checked.
    error_message : str
        The error message that will be displayed.

    Returns
    -------
    value : str
        If the value is not empty.

    Raises
    ------
    ConfigError
        If the value is empty.
    """
    if value == "":
        raise ConfigError(error_message)

    return value


def is_positive(value: int, error_message: str) -> int:
    """
    Checks if the value is positive.

    Parameters
    ----------
    value : int
        The value to be checked.
    error_message : str
        The error message that will be displayed.

    Returns
    -------
    value : int
        If the value is positive.

    Raises
    ------
    ConfigError
        If the value is not positive.
    """
    if value < 1:
        raise ConfigError(error_message)

    return value


def is_non_negative(value: int, error_message: str) -> int:
    """
    Checks if the value is zero or positive.

    Parameters
    ----------
    value : int
        The value to be checked.
    error_message : str
        The error message that will be displayed.

    Returns
    -------
    value : int
        If the value is not negative.

    Raises
    ------
    ConfigError
        If the value is negative.
    """
    if value < 0:
        raise ConfigError(error_message)

    return value


def is_in_range(value: int, lower: int, upper: int, error_message: str) -> int:
    """
    Checks if lower <= value <= upper.

    Parameters
    ----------
    value : int
        The value to be checked.
    lower : int
        The smallest accepted value.
    upper : int
        The largest accepted value.
    error_message : str
        The error message that will be displayed.

    Returns
    -------
    value : int
        If the value is inside the range.

    Raises
    ------
    ConfigError
        If the value is outside the range.
    """
    if value < lower or upper < value:
        raise ConfigError(error_message)

    return value


def is_power_of_two(value: int, error_message: str) -> int:
    """
    Checks if the value is a power of two (1 included).

    Parameters
    ----------
    value : int
        The value to be checked.
    error_message : str
        The error message that will be displayed.

    Returns
    -------
    value : int
        If the value is a power of two.

    Raises
    ------
    ConfigError
        If the value is not a power of two.
    """
    if value < 1 or value & (value - 1):
        raise ConfigError(error_message)

    return value


def is_bit_text(text: str, error_message: str) -> str:
    """
    Checks if the text is a non-empty string over {0, 1}.

    Parameters
    ----------
    text : str
        The text to be checked.
    error_message : str
        The error message that will be displayed.

    Returns
    -------
    text : str
        If the text is a bit string.

    Raises
    ------
    ConfigError
        If the text is empty or has characters other than '0' and '1'.
    """
    if text == "" or text.strip("01") != "":
        raise ConfigError(error_message + " Text: " + repr(text))

    return text


def is_valid_path(path: str, error_message: str) -> str:
    """
    Check if the path exists.

    Parameters
    ----------
    path : str
        The path.
    error_message : str
        The error message that will be displayed.

    Returns
    -------
    path : str
        If the path exists.

    Raises
    ------
    IngestError
        If the path does not exist.
    """
    if not os.path.exists(path):
        raise IngestError(error_message + " Path: " + path)

    return path


def is_writable_path(path: str, error_message: str) -> str:
    """
    Check if a file can be created or overwritten at the path.

    Parameters
    ----------
    path : str
        The target file.
    error_message : str
        The error message that will be displayed.

    Returns
    -------
    path : str
        If its directory exists and is writable and the path is not a directory.

    Raises
    ------
    ConfigError
        If the file cannot be written.
    """
    directory = os.path.dirname(os.path.abspath(path))
    if os.path.isdir(path) or not os.path.isdir(directory) or not os.access(directory, os.W_OK):
        raise ConfigError(error_message + " Path: " + path)

    return path
