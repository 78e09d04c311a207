# utils.py ---
#
# Filename: utils.py
#
# Commentary:
#
# Logging setup and helpers for reading inputs given either inline or as
# file names.
#
import sys
import logging
from pathlib import Path


def setup_logging(logfile=None, level=logging.INFO, stream_level=logging.WARNING):
    """
    Set up logging to stderr and, optionally, to a file, with separate levels.

    Stdout is reserved for computed data, so diagnostics never go there.
    """
    stream_handler = logging.StreamHandler(sys.stderr)
    stream_handler.setLevel(stream_level)
    handlers = [stream_handler]
    if logfile:
        file_handler = logging.FileHandler(logfile)
        file_handler.setLevel(level)
        handlers.append(file_handler)

    log_format = '%(asctime)s, %(levelname)8s, %(message)s'
    logging.basicConfig(
        level=min(level, stream_level),
        format=log_format,
        datefmt='%Y-%m-%d %H:%M:%S',
        handlers=handlers,
        force=True
    )


def read_source(source):
    """
    Returns the text behind source: the file content if source names an
    existing file, otherwise source itself.

    Args:
        source: A path or an inline text.

    Returns:
        A tuple (text, origin) where origin is the Path read or None.
    """
    path = Path(source)
    try:
        is_file = path.is_file()
    except OSError:
        is_file = False
    if is_file:
        logging.debug(f"Reading input from {path}")
        return path.read_text(), path
    return str(source), None


def significant_lines(text, separators="\n"):
    """Splits text into stripped, non-empty lines with '#' comments removed."""
    for sep in separators[1:]:
        text = text.replace(sep, separators[0])
    lines = []
    for line in text.split(separators[0]):
        line = line.split('#', 1)[0].strip()
        if line:
            lines.append(line)
    return lines

# 
# utils.py ends here
