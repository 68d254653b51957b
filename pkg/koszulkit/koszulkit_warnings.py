"""
Warning classes
"""


class KoszulkitWarning(Warning):
    """General koszulkit warning"""

    pass
