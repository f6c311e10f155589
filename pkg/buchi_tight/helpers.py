# -*- coding: utf-8 -*-
# ==============================================================================
# Imports
# ==============================================================================
import hashlib
from configparser import ConfigParser


# ==============================================================================
# Globals
# ==============================================================================
DEFAULT_SECTION = 'bench'


# ==============================================================================
# Helpers
# ==============================================================================
def fingerprint(text, length=16):
    """Compute a short content hash for a serialized automaton.

    Args:
        text (str): The NBA v1 text of an automaton.
        length (int): Number of hex digits to keep.

    Returns:
        str: The leading hex digits of the SHA-256 digest.
    """

    return hashlib.sha256(text.encode('utf-8')).hexdigest()[:length]


def format_set(states):
    """Render a set of states as '{0,2,3}' in ascending order.

    Args:
        states (iterable of int): The states to render.

    Returns:
        str: The rendered set.
    """

    return '{' + ','.join(str(q) for q in sorted(states)) + '}'


def parse_flat_config(text, section=DEFAULT_SECTION):
    """Parse a flat 'key = value' document into a dictionary.

    The document has no section header of its own; one is prepended so the
    standard ini reader can be used.

    Args:
        text (str): The configuration text.
        section (str): Name of the implicit section.

    Returns:
        dict of {str: str}: Raw values keyed by lower-cased option name.

    Raises:
        ValueError: The text could not be parsed.
    """

    parser = ConfigParser()
    try:
        parser.read_string(u'[{}]\n{}'.format(section, text))
    except Exception as error:
        raise ValueError("Malformed configuration: {}".format(error))

    return dict(parser.items(section))


def parse_int_list(value):
    """Parse '1..5' or '1,2,4' into a tuple of integers.

    Args:
        value (str): A comma separated list or an inclusive 'lo..hi' range.

    Returns:
        tuple of int: The parsed values.

    Raises:
        ValueError: The value is empty or not integral.
    """

    value = value.strip()
    if '..' in value:
        low, high = (int(part) for part in value.split('..', 1))
        result = tuple(range(low, high + 1))
    else:
        result = tuple(int(part) for part in value.split(',') if part.strip())

    if not result:
        raise ValueError("Empty list: '{}'".format(value))

    return result


def parse_float_list(value):
    """Parse '1.0,1.5' into a tuple of floats.

    Args:
        value (str): A comma separated list.

    Returns:
        tuple of float: The parsed values.

    Raises:
        ValueError: The value is empty or not numeric.
    """

    result = tuple(float(part) for part in value.split(',') if part.strip())
    if not result:
        raise ValueError("Empty list: '{}'".format(value))

    return result
