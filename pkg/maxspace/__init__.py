from importlib.metadata import version, PackageNotFoundError

try:
    __version__ = version("maxspace-benchmarks")
except PackageNotFoundError:
    # package is not installed
    __version__ = None
