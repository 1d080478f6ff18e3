from cyclogoppa._version import __version__
