"""
Minimal projective covers, syzygies and minimal resolutions of graded modules, and
the certificates read off from them.

The cover of ``M`` has one summand per top fiber ``(x, i)`` with top space ``T``:

    P_{x,i}(y) = hom(x, y) (x)_{k G_x} T      in degree i + y - x

and sends ``beta (x) t`` to ``beta . s(t)`` for an equivariant section ``s`` of the top
projection ``M(x)_i -> T``.
"""
import logging
from collections import OrderedDict

from .exceptions import CategoryException, ModuleException, WindowException, make_check_function
from .group_tensor import GroupTensor, group_matrices
from .lincat import essential_subcategory, linearize, same_structure
from .linalg import ONE, Matrix, hstack, kernel_basis, rank
from .modules import (
    GradedModule,
    SubspaceFamily,
    Top,
    direct_sum,
    generated_in_degree,
    generated_in_position,
    ini,
    radical,
    regular_simple,
    submodule,
    validate_module,
    zero_module,
)
from .reports import CertificateReport, EssentialReport

LOG = logging.getLogger(__name__)


class Summand(object):
    """One indecomposable-by-top block ``hom(x, -) (x) T <shift>`` of a cover."""

    def __init__(self, x, shift, top_dim, top_action):
        self.x = x
        self.shift = shift
        self.top_dim = top_dim
        self.top_action = top_action

    def key(self):
        return self.x, self.shift, self.top_dim

    def to_dict(self):
        return OrderedDict([("x", self.x), ("shift", self.shift), ("top_dim", self.top_dim)])

    def __repr__(self):
        return "Summand(x={}, shift={}, top_dim={})".format(self.x, self.shift, self.top_dim)


class Cover(object):
    """
    A minimal projective cover ``pi: P -> M``.

    :ivar summands: list of :class:`Summand`, in the block order of ``P``
    :ivar module: the projective module ``P``
    :ivar pi: dict ``(object, degree) -> Matrix`` from ``P`` to ``M``
    :ivar kernel: the syzygy ``Omega M`` as a GradedModule
    :ivar top: the :class:`~koszulkit.modules.Top` of ``M``
    """

    def __init__(self, base, summands, module, pi, kernel, top):
        self.base = base
        self.summands = summands
        self.module = module
        self.pi = pi
        self.kernel = kernel
        self.top = top

    def signature(self):
        """Multiset of summand keys; equal for isomorphic covers."""
        return sorted(s.key() for s in self.summands)

    def to_dict(self):
        return OrderedDict(
            [
                ("module", self.base.name),
                ("summands", [s.to_dict() for s in self.summands]),
                ("kernel_dims", OrderedDict(self.kernel.dims)),
            ]
        )

    def __repr__(self):
        return "Cover({}, summands={})".format(self.base.name, self.summands)


def _summand_module(l, x, i, t, top_action):
    """``hom(x, -) (x)_{k G_x} T`` shifted to start in degree ``i``."""
    group = l.group(x)
    tensors = {}
    for y in range(x, l.hi + 1):
        tensors[y] = GroupTensor(
            group,
            l.dim(x, y),
            lambda g, a, y=y: l.compose(x, x, y, a, g),
            t,
            top_action,
            what="cover summand ({}, {}) at {}".format(x, i, y),
        )
    dims = {}
    group_action = {}
    arrow_action = {}
    for y, tensor in tensors.items():
        j = i + y - x
        dims[(y, j)] = tensor.dim
        group_action[(y, j)] = [
            Matrix.from_columns(
                [tensor.project_vector(l.compose(x, y, y, g, a), {b: ONE}) for a, b in tensor.basis], tensor.dim
            )
            for g in l.group(y).generators
        ]
        if y < l.hi:
            target = tensors[y + 1]
            arrow_action[(y, j)] = [
                Matrix.from_columns(
                    [target.project_vector(l.compose(x, y, y + 1, r, a), {b: ONE}) for a, b in tensor.basis],
                    target.dim,
                )
                for r in l.arrow_generators(y)
            ]
    name = "P({}, {})".format(x, i)
    return GradedModule(l, dims, group_action, arrow_action, name=name), tensors


def equivariant_section(m, top, y, j):
    """
    A section of the top projection at ``(y, j)`` commuting with ``G_y``: the section
    by free coordinates averaged over the group.
    """
    section = top.section(y, j)
    if top.radical.dim(y, j) == 0:
        return section
    group = m.lincat.group(y)
    t = top.dims[(y, j)]
    top_matrices = group_matrices(group, top.group_action[(y, j)], t)
    total = Matrix.zeros(m.dim(y, j), t)
    for g in group.elements():
        total = total + m.group_matrix(y, j, g) * section * top_matrices[group.inverse(g)]
    return total.scale(ONE / group.order)


def projective_cover(m, check=True):
    """
    Minimal projective cover of ``m`` and its kernel.

    :param m: GradedModule
    :param bool check: validate ``m`` first
    :return: :class:`Cover`
    :raises ModuleException: if ``m`` is not a module, or the constructed map is not a
        surjection with kernel in the radical
    """
    l = m.lincat
    if check:
        report = validate_module(m)
        if not report.passed:
            raise ModuleException("invalid module {}".format(m.name), report.witness)
    top = Top(m)
    if m.is_zero():
        return Cover(m, [], zero_module(l), {}, zero_module(l, "Omega({})".format(m.name)), top)

    summands = []
    blocks = []
    pieces = []
    for (x, i), t in top.dims.items():
        action = top.group_action[(x, i)]
        summands.append(Summand(x, i, t, action))
        module, tensors = _summand_module(l, x, i, t, action)
        blocks.append(module)
        section = equivariant_section(m, top, x, i)
        piece = {}
        for y, tensor in tensors.items():
            j = i + y - x
            columns = []
            for a, b in tensor.basis:
                columns.append(m.action(x, y, i, a).apply(section.column(b)) if m.dim(y, j) else {})
            piece[(y, j)] = Matrix.from_columns(columns, m.dim(y, j))
        pieces.append(piece)
    p = direct_sum(*blocks)
    p.name = "P({})".format(m.name)

    pi = {}
    spaces = {}
    for (y, j), n in p.dims.items():
        rows = m.dim(y, j)
        pi[(y, j)] = hstack(
            [piece.get((y, j), Matrix.zeros(rows, block.dim(y, j))) for piece, block in zip(pieces, blocks)], rows
        )
        spaces[(y, j)] = kernel_basis(pi[(y, j)])
    for (y, j), n in m.dims.items():
        if (y, j) not in pi or rank(pi[(y, j)]) != n:
            raise ModuleException("cover is not surjective", {"module": m.name, "fiber": [y, j]})

    family = SubspaceFamily(p, spaces)
    if not family.is_subfamily_of(radical(p)):
        raise ModuleException("cover kernel leaves the radical", {"module": m.name})
    kernel = submodule(p, family, name="Omega({})".format(m.name))
    LOG.debug("cover of %s: %s, kernel dims %s", m.name, summands, dict(kernel.dims))
    return Cover(m, summands, p, pi, kernel, top)


class Resolution(object):
    """
    Covers of ``base`` and its syzygies; ``syzygies[n]`` is ``Omega^n base`` and
    ``steps[n]`` covers it.
    """

    def __init__(self, base, steps, syzygies):
        self.base = base
        self.steps = steps
        self.syzygies = syzygies

    @property
    def length(self):
        """Largest ``n`` with ``Omega^n`` nonzero among the computed syzygies."""
        nonzero = [n for n, s in enumerate(self.syzygies) if not s.is_zero()]
        return nonzero[-1] if nonzero else 0

    def syzygy(self, n):
        """``Omega^n``; zero past the point where the resolution stopped."""
        if n < len(self.syzygies):
            return self.syzygies[n]
        return zero_module(self.base.lincat, "Omega^{}({})".format(n, self.base.name))

    def exact(self):
        """``dim P_n = dim Omega^n + dim Omega^{n+1}`` on every fiber."""
        for n, cover in enumerate(self.steps):
            keys = set(cover.module.dims) | set(self.syzygies[n].dims)
            for y, j in keys:
                if cover.module.dim(y, j) != self.syzygies[n].dim(y, j) + self.syzygies[n + 1].dim(y, j):
                    LOG.warning("resolution of %s not exact at step %s fiber %s", self.base.name, n, (y, j))
                    return False
        return True

    def __repr__(self):
        return "Resolution({}, steps={})".format(self.base.name, len(self.steps))


def minimal_resolution(m, depth):
    """
    Iterate :func:`projective_cover` ``depth`` times, stopping early at the zero module.

    :return: :class:`Resolution` with syzygies ``Omega^0 .. Omega^k``, ``k <= depth``
    """
    if depth < 0:
        raise ValueError("depth must be non-negative")
    steps = []
    syzygies = [m]
    current = m
    for n in range(depth):
        if current.is_zero():
            break
        cover = projective_cover(current, check=(n == 0))
        steps.append(cover)
        current = cover.kernel
        syzygies.append(current)
        LOG.debug("Omega^%s(%s): dims %s", n + 1, m.name, dict(current.dims))
    return Resolution(m, steps, syzygies)


class BettiTable(object):
    """``entries[n][(y, j)]``: dimension of the top of ``Omega^n`` at ``(y, j)``."""

    def __init__(self, entries):
        self.entries = entries

    def entry(self, n, y, j):
        if n >= len(self.entries):
            return 0
        return self.entries[n].get((y, j), 0)

    def to_dict(self):
        return OrderedDict((n, OrderedDict(row)) for n, row in enumerate(self.entries))

    def __repr__(self):
        return "BettiTable({})".format(self.entries)


def _step_top(r, n):
    if n < len(r.steps):
        return r.steps[n].top
    return Top(r.syzygy(n))


def betti_table(r):
    return BettiTable([OrderedDict(_step_top(r, n).dims) for n in range(len(r.syzygies))])


def _certificate_steps(report, r, depth, expected_degree, expected_position):
    for n in range(depth + 1):
        syzygy = r.syzygy(n)
        degree = expected_degree + n
        by_degree, degree_witness = generated_in_degree(syzygy, degree)
        report.add("degree_{}".format(n), by_degree, dict(degree_witness or {}, step=n, degree=degree))
        step = OrderedDict(
            [
                ("n", n),
                ("dims", OrderedDict(syzygy.dims)),
                ("top", OrderedDict(_step_top(r, n).dims)),
                ("generated_in_degree", by_degree),
            ]
        )
        if expected_position is not None:
            position = expected_position + n
            by_position, position_witness = generated_in_position(syzygy, position)
            report.add(
                "position_{}".format(n), by_position, dict(position_witness or {}, step=n, position=position)
            )
            step["generated_in_position"] = by_position
        report.steps.append(step)
        LOG.info("%s step %s: %s", report.subject, n, dict(step))


def koszul_certificate(l, x, depth):
    """
    Linearity of the minimal resolution of the simple at ``x``: for ``n <= depth``,
    ``Omega^n`` is generated in degree ``n`` and in position ``x + n``.

    :return: :class:`~koszulkit.reports.CertificateReport`
    :raises WindowException: if ``x + depth`` is past the interval
    """
    if x not in l.interval:
        raise CategoryException("object {} is outside the interval {}".format(x, l.interval))
    if x + depth > l.hi:
        raise WindowException(x, depth, l.hi)
    r = minimal_resolution(regular_simple(l, x), depth)
    report = CertificateReport("S{} over {}".format(x, l.describe()), x=x, depth=depth)
    _certificate_steps(report, r, depth, 0, x)
    report.add("exact", r.exact())
    return report


koszul_certificate_ex = make_check_function(koszul_certificate)


def module_certificate(m, depth):
    """
    Linearity test for a module generated in its lowest degree ``d``: ``Omega^n m`` must be
    generated in degree ``d + n``.

    :return: :class:`~koszulkit.reports.CertificateReport`
    """
    l = m.lincat
    if m.is_zero():
        return CertificateReport(m.name, depth=depth)
    start = ini(m)
    if start + depth > l.hi:
        raise WindowException(start, depth, l.hi)
    lowest = min(j for (_, j) in m.dims)
    r = minimal_resolution(m, depth)
    report = CertificateReport(m.name, depth=depth, degree=lowest)
    _certificate_steps(report, r, depth, lowest, None)
    return report


def yoneda_dims(l, depth):
    """
    ``dim Ext^n(S_x, S_y<n>)`` for ``n <= min(depth, hi - x)``, read off the tops of the
    syzygies of each simple.

    :return: dict ``(x, y, n) -> int``, zeros included
    :raises ModuleException: if a resolution is not linear, since the tops then do not
        determine these groups
    """
    if depth > l.hi - l.lo:
        raise WindowException(l.lo, depth, l.hi)
    table = OrderedDict()
    for x in l.objects():
        steps = min(depth, l.hi - x)
        r = minimal_resolution(regular_simple(l, x), steps)
        for n in range(steps + 1):
            dims = _step_top(r, n).dims
            nonlinear = [key for key in dims if key[1] != n]
            if nonlinear:
                raise ModuleException(
                    "resolution of S{} is not linear".format(x), {"step": n, "fiber": list(nonlinear[0])}
                )
            for y in l.objects():
                table[(x, y, n)] = dims.get((y, n), 0)
    return table


def essential_check(c1, c2, iv):
    """
    Compare the essential subcategories of two combinatorial categories on ``iv`` and run
    the simple certificates on both at every boundary-valid depth.

    :return: :class:`~koszulkit.reports.EssentialReport`
    """
    e1 = essential_subcategory(linearize(c1, iv))
    e2 = essential_subcategory(linearize(c2, iv))
    report = EssentialReport("{} vs {}".format(c1.describe(), c2.describe()))
    report.add("identical", same_structure(e1, e2))
    outcomes = OrderedDict()
    for x in e1.objects():
        depth = e1.hi - x
        first = koszul_certificate(e1, x, depth)
        second = koszul_certificate(e2, x, depth)
        outcomes[x] = [first.passed, second.passed]
        report.add("koszul_{}".format(x), first.passed and second.passed, {"x": x, "passed": outcomes[x]})
    report.details["certificates"] = outcomes
    return report
