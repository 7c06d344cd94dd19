from setuptools import setup, find_packages


with open("README.md", "r") as readme:
    long_description = readme.read()


setup(
    name='isocompress',
    version='1.0',
    packages=find_packages(exclude=["tests", "tests.*"]),
    license='MIT Licence',
    description='Compression of sparse sets of binary strings by isolating GF(2) hashes',
    long_description=long_description,
    python_requires='>=3.10',
    install_requires=[
        'numpy>=1.24',
    ],
    extras_require={
        'test': ['pytest>=7.0'],
    },
    entry_points={
        'console_scripts': [
            'isocompress=isocompress.cli.cli:main',
        ],
    },
    classifiers=[
        "Programming Language :: Python :: 3.10",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
    ]
)
