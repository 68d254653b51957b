"""
Report objects returned by the checks, and their conversion to JSON-compatible data.

Every check returns an object with a boolean ``passed``, a ``witness`` (None when it
passed) and ``to_dict()``; reports are truthy iff they passed.
"""
import logging
from collections import OrderedDict
from fractions import Fraction

from six import integer_types, string_types

from .category import CombMorphism
from .conversions import to_rational_string
from .lookup_dicts import (
    C_CONDITION_DESCRIPTIONS,
    CONDITION_DESCRIPTIONS,
    LEMMA_CONDITION_DESCRIPTIONS,
    MODULE_CONDITION_DESCRIPTIONS,
)

LOG = logging.getLogger(__name__)


class CheckResult(object):
    """Outcome of one named condition."""

    def __init__(self, name, passed, witness=None, description=None):
        self.name = name
        self.passed = bool(passed)
        self.witness = witness
        self.description = description

    def to_dict(self):
        out = OrderedDict([("name", self.name), ("passed", self.passed)])
        if self.description:
            out["description"] = self.description
        if not self.passed:
            out["witness"] = self.witness
        return out

    def __bool__(self):
        return self.passed

    __nonzero__ = __bool__

    def __repr__(self):
        return "CheckResult({}, passed={})".format(self.name, self.passed)


class Report(object):
    """
    An ordered set of :class:`CheckResult` plus free-form details.

    :param subject: what was checked, printed in logs
    """

    kind = "report"
    descriptions = {}

    def __init__(self, subject, **details):
        self.subject = subject
        self.results = OrderedDict()
        self.details = OrderedDict(sorted(details.items()))

    def add(self, name, passed, witness=None):
        """Record a condition; a repeated name keeps the first failure."""
        existing = self.results.get(name)
        if existing is not None and not existing.passed:
            return existing
        result = CheckResult(name, passed, witness, self.descriptions.get(name))
        self.results[name] = result
        if not result.passed:
            LOG.info("%s: %s failed on %s (witness %s)", self.kind, name, self.subject, witness)
        return result

    def __getitem__(self, name):
        return self.results[name]

    def __contains__(self, name):
        return name in self.results

    @property
    def passed(self):
        return all(r.passed for r in self.results.values())

    def failures(self):
        return [r for r in self.results.values() if not r.passed]

    @property
    def witness(self):
        failures = self.failures()
        if not failures:
            return None
        return {"condition": failures[0].name, "witness": failures[0].witness}

    def to_dict(self):
        out = OrderedDict([("kind", self.kind), ("subject", str(self.subject)), ("passed", self.passed)])
        out["results"] = [r.to_dict() for r in self.results.values()]
        out.update(self.details)
        return out

    def __bool__(self):
        return self.passed

    __nonzero__ = __bool__

    def __repr__(self):
        return "{}({}, passed={})".format(self.__class__.__name__, self.subject, self.passed)


class ValidationReport(Report):
    """Axioms of a truncated graded linear category, see :func:`koszulkit.lincat.validate`."""

    kind = "validation"
    descriptions = CONDITION_DESCRIPTIONS


class ConditionReport(Report):
    """Monoidal conditions on a combinatorial category."""

    kind = "conditions"
    descriptions = C_CONDITION_DESCRIPTIONS


def to_json_compatible(obj):
    """
    Recursively convert reports and exact values into JSON-serializable data.

    Fractions become ``"p/q"`` strings, tuple dictionary keys become ``"a,b,c"``,
    morphisms become their string form and sets become sorted lists.
    """
    if hasattr(obj, "to_dict"):
        return to_json_compatible(obj.to_dict())
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, Fraction):
        return to_rational_string(obj)
    if isinstance(obj, integer_types) or isinstance(obj, string_types) or isinstance(obj, float):
        return obj
    if isinstance(obj, CombMorphism):
        return str(obj)
    if isinstance(obj, dict):
        out = OrderedDict()
        for key, value in obj.items():
            out[_key_string(key)] = to_json_compatible(value)
        return out
    if isinstance(obj, (set, frozenset)):
        return sorted(to_json_compatible(v) for v in obj)
    if isinstance(obj, (list, tuple)):
        return [to_json_compatible(v) for v in obj]
    return str(obj)


def _key_string(key):
    if isinstance(key, tuple):
        return ",".join(str(k) for k in key)
    return str(key)


class ModuleReport(Report):
    """Well-definedness of a graded module, see :func:`koszulkit.modules.validate_module`."""

    kind = "module"
    descriptions = MODULE_CONDITION_DESCRIPTIONS


class CertificateReport(Report):
    """
    Linearity of a minimal resolution. For each step ``n`` the results ``degree_n`` and
    ``position_n`` say whether the syzygy is generated in the expected degree and position.
    """

    kind = "koszul"

    def __init__(self, subject, **details):
        super(CertificateReport, self).__init__(subject, **details)
        self.steps = []

    def to_dict(self):
        out = super(CertificateReport, self).to_dict()
        out["steps"] = self.steps
        return out


class QuadraticReport(Report):
    """Generation of the free-cover kernel in degree 2."""

    kind = "quadratic"


class TwistReport(Report):
    """Comparison of dual relations with the kernel of twisted composition."""

    kind = "twist"


class DecompositionReport(Report):
    """Bijectivity of the decomposition map of a restricted representable, per object."""

    kind = "decomposition"


class LemmaReport(Report):
    """Splitting of a restricted syzygy into a syzygy and a projective complement."""

    kind = "lemma"
    descriptions = LEMMA_CONDITION_DESCRIPTIONS


class EssentialReport(Report):
    """Agreement of essential subcategories and of their Koszul certificates."""

    kind = "essential"
