"""
Exception-s and exception handling code.
"""
import inspect
import logging
from functools import wraps

LOG = logging.getLogger(__name__)


def make_check_function(check_function):
    """Create a variant of a check that raises instead of returning a failing report.
    It is called by calling::

        validate_ex = make_check_function(validate)

    ``validate`` returns a :class:`~koszulkit.lincat.ValidationReport`; ``validate_ex``
    returns the same report when it passed and raises a :class:`CheckFailedException`
    otherwise. This gives two versions of every check: one for inspecting the result,
    one for setup code that expects the check to go through::

        report = validate(lincat)
        assert not report.passed, "This test fails if the planted defect is not found"

        validate_ex(lincat)

    :param check_function: Function object to wrap. It must return an object with a
        boolean ``passed`` attribute.
    """

    @wraps(check_function)
    def check_function_exception_handle(*args, **kwargs):
        report = check_function(*args, **kwargs)
        if not hasattr(report, "passed"):
            raise TypeError(
                "Functions wrapped by the check handler should return a report with a "
                "'passed' attribute."
            )
        check_report(report, check_function, args, kwargs)
        return report

    check_function_exception_handle.__doc__ = """Executes :py:func:`{}`, and checks the
report; raising :class:`~koszulkit.exceptions.CheckFailedException` if it did not pass.
""".format(
        check_function.__name__
    )
    check_function_exception_handle.__name__ = check_function.__name__ + "_ex"
    return check_function_exception_handle


def check_report(report, check_function, args, kwargs):
    """
    Log the outcome of a check and raise if it failed.

    :param report: Report returned by the check
    :param check_function: koszulkit function that was called
    :param args: Arguments passed to the check.
    :param kwargs: Keyword arguments passed to the check.
    """
    from koszulkit.string_helpers import pformat_check_args

    all_args = inspect.getcallargs(check_function, *args, **kwargs)
    formatted_args = pformat_check_args(all_args)

    arg_string = "\n".join("\t{}".format(x) for x in formatted_args)
    LOG.debug(
        "Check %s %s", check_function.__name__, "passed" if report.passed else "failed"
    )
    if not report.passed:
        raise CheckFailedException(check_function.__name__, report, arg_string)


class KoszulkitException(Exception):
    """
    Base exception class for every custom exception raised by koszulkit.
    """

    pass


class CategorySpecException(KoszulkitException):
    """A category spec is malformed. Names the offending field."""

    def __init__(self, field, reason):
        self.field = field
        self.reason = reason
        super(CategorySpecException, self).__init__(field, reason)

    def __str__(self):
        return "Invalid category spec field '{}': {}".format(self.field, self.reason)


class CategoryException(KoszulkitException):
    """
    Raised for operations a category cannot perform: endpoints that do not match,
    objects outside the range or interval, or structure (⊙, ρ) the family lacks.
    """

    pass


class GroupException(KoszulkitException):
    """A multiplication table is not a group, or a map is not a group action."""

    pass


class ModuleException(KoszulkitException):
    """An invalid graded module or subspace family, with a witness if one is known."""

    def __init__(self, reason, witness=None):
        self.reason = reason
        self.witness = witness
        super(ModuleException, self).__init__(reason, witness)

    def __str__(self):
        if self.witness is None:
            return self.reason
        return "{}\n\tWitness: {}".format(self.reason, self.witness)


class WindowException(KoszulkitException):
    """A resolution depth past the boundary-valid window of a truncation."""

    def __init__(self, x, depth, hi):
        self.x = x
        self.depth = depth
        self.hi = hi
        super(WindowException, self).__init__(x, depth, hi)

    def __str__(self):
        return (
            "Depth {depth} from object {x} leaves the boundary-valid window "
            "(x + depth must be <= {hi})".format(depth=self.depth, x=self.x, hi=self.hi)
        )


class DimensionLimitException(KoszulkitException):
    """A space larger than ``defaults.MAX_DIM`` (env ``KOSZULKIT_MAX_DIM``)."""

    def __init__(self, what, dim, limit):
        self.what = what
        self.dim = dim
        self.limit = limit
        super(DimensionLimitException, self).__init__(what, dim, limit)

    def __str__(self):
        return "{} has dimension {} which exceeds the limit {} (KOSZULKIT_MAX_DIM)".format(
            self.what, self.dim, self.limit
        )


class CheckFailedException(KoszulkitException):
    """Raised by the ``_ex`` variant of a check whose report did not pass."""

    def __init__(self, check_name, report, arguments):
        """
        :param check_name: The name of the check
        :param report: The failing report
        :param arguments: The formatted arguments passed into the check
        """
        self.check_name = check_name
        self.report = report
        self.arguments = arguments
        super(CheckFailedException, self).__init__(check_name, report, arguments)

    def __str__(self):
        data = ("\n\tCheck: {name}" "\n\tWitness: {witness}" "\n\tArguments:\n{args}").format(
            name=self.check_name,
            witness=getattr(self.report, "witness", None),
            args=self.arguments,
        )
        return data


def check_dimension(what, dim):
    """
    Raise :class:`DimensionLimitException` if ``dim`` exceeds the configured limit.

    :param str what: Description of the space, used in the error message.
    :param int dim: Its dimension.
    """
    from koszulkit import defaults

    if dim > defaults.MAX_DIM:
        raise DimensionLimitException(what, dim, defaults.MAX_DIM)
