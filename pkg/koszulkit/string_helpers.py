"""
Helpers for printing koszulkit objects and call arguments in log lines.
"""

KSK_MAX_ARG_LENGTH = 60


def _trunc(value):
    """``str(value)`` cut at ``KSK_MAX_ARG_LENGTH``, followed by the length of ``value``."""
    text = str(value)
    if len(text) <= KSK_MAX_ARG_LENGTH:
        return text
    size = len(value) if hasattr(value, "__len__") else len(text)
    return "{}[...] (len: {})".format(text[:KSK_MAX_ARG_LENGTH], size)


def pformat_check_args(func_args):
    """
    Convert a dictionary of funcargs: funcvalues into a list of readable lines.

    Categories and modules print through their ``describe()`` method when they have
    one; anything longer than ``KSK_MAX_ARG_LENGTH`` is truncated.

    :param func_args: dictionary
    :return: List of string lines
    """
    log_list = []
    for key, value in sorted(func_args.items(), key=lambda x: x[0]):
        if hasattr(value, "describe"):
            log_list.append("%s: %s" % (key, value.describe()))
            continue
        log_list.append("%s: %s" % (key, _trunc(value)))
    return log_list


def format_permutation(values):
    """One-line form of a tuple of images, e.g. ``(2, 1, 3)`` -> ``'[2 1 3]'``."""
    return "[%s]" % " ".join(str(v) for v in values)
