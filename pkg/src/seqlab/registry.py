"""Every sequence the package knows by id: a generator where one exists,
otherwise the stored listing. ``desk`` is how many terms the generator is
expected to reproduce in the regular test run, ``extended`` how many with
the long-running opt-in checks."""
from __future__ import annotations

from dataclasses import dataclass

from . import boustrophedon as bo
from . import extremal as ex
from . import hard_enum as he
from . import recursive as rc
from . import seqdb as sd
from . import tchouka as tc
from . import wythoff as wy
from .errors import BudgetExceeded
from .kernel import NIM_TABLE, PASCAL, Sequence, gilbreath_sequence, read_square_by_antidiagonals, read_triangle_by_rows
from .levine import levine_terms
from .series import e8_theta, leech_theta


@dataclass(frozen=True)
class Registered:
    sequence: Sequence
    desk: int
    extended: int = 0
    aliases: tuple = ()

    @property
    def id(self) -> str:
        return self.sequence.id


def _indexed(f, start: int = 1, cap: int | None = None):
    """Generator returning f(start), f(start + 1), ... ."""

    def gen(count: int) -> list[int]:
        if cap is not None and count > cap:
            raise BudgetExceeded(f"only {cap} terms are computable at desk scale")
        return [f(n) for n in range(start, start + count)]

    return gen


def _capped(gen, cap: int):
    def wrapped(count: int) -> list[int]:
        if count > cap:
            raise BudgetExceeded(f"only {cap} terms are computable at desk scale")
        return gen(count)

    return wrapped


def _finite(values_fn):
    """Generator for a finite listing: returns at most its length."""
    return lambda count: list(values_fn())[:count]


def _tchouka_numbers(count: int) -> list[int]:
    out = []
    for b in tc.winning_positions(count - 1):
        text = str(b)
        if "," in text:  # a hole holds 10 or more stones: no digit string
            break
        out.append(int(text))
    return out


def _entries() -> list[Registered]:
    S = Sequence
    return [
        Registered(S("A000435", 1, _indexed(rc.tree_height_sum_W), name="tree height sums W_n"), 7, aliases=("tree-heights",)),
        Registered(S("A000315", 1, _indexed(he.latin_squares_reduced, cap=he.LATIN_MAX_N), name="reduced Latin squares"), 6, 7, ("latin",)),
        Registered(S("A007153", 1, _indexed(he.dedekind_variant, cap=he.DEDEKIND_MAX_N), name="monotone Boolean functions (listed convention)"), 5, aliases=("dedekind",)),
        Registered(S("A003432", 1, _indexed(he.hadamard_maxdet01, cap=he.HADAMARD_MAX_N), name="maximal determinant of a {0,1} matrix"), 6, 7, ("maxdet",)),
        Registered(S("A058986", 1, _indexed(he.pancake_f, cap=he.PANCAKE_MAX_N), name="pancake flipping diameter"), 9, 10, ("pancake",)),
        Registered(S("A005228", 1, lambda c: rc.hofstadter_complement(c)[0], name="differences are the complement"), 13, aliases=("hofstadter",)),
        Registered(S("A030124", 1, rc.hofstadter_differences, name="complement of A005228"), 14),
        Registered(S("A001462", 1, rc.golomb, name="Golomb's sequence"), 20, aliases=("golomb",)),
        Registered(S("A007097", 1, rc.wilson_primeth, name="primeth recurrence"), 12, 13, ("primeth",)),
        Registered(S("A005132", 1, rc.recaman_subtract_first, name="Recaman (subtract first)"), 14, aliases=("recaman",)),
        Registered(S("A008336", 1, rc.recaman_divide, name="Recaman (divide first)"), 10),
        Registered(S("A004001", 1, rc.conway_10000, name="Conway's $10,000 sequence"), 17, aliases=("conway",)),
        Registered(S("A005229", 1, rc.conway_variant_A5229, name="a(a(n-2)) + a(n - a(n-2))"), 19),
        Registered(S("A028354", 1, rc.prague_clock, name="Prague clock"), 29, aliases=("prague",)),
        Registered(S("A005316", 1, _indexed(he.meander_count, cap=he.MEANDER_MAX_N), name="meandric numbers"), 11, aliases=("meanders",)),
        Registered(S("A005315", 1, _indexed(he.closed_meander_count, cap=he.MEANDER_MAX_N // 2 + 1), name="closed meanders with 2n crossings"), 6),
        Registered(S("A001011", 1, _indexed(he.stamp_foldings, cap=he.STAMP_MAX_N), name="stamp foldings"), 10, aliases=("stamps",)),
        Registered(S("A000108", 0, _indexed(he.catalan, start=0), name="Catalan numbers"), 10, aliases=("catalan",)),
        Registered(S("A018236", 0, _finite(lambda: ex.extremal_coefficients(72, 19)), name="extremal weight enumerator, length 72 (powers of y^4)"), 7),
        Registered(S("A034414", 0, _indexed(lambda m: ex.extremal_leading_coeffs(m)[0], start=0), name="extremal codes: minimal weight count"), 9, aliases=("fig3",)),
        Registered(S("A034415", 0, _indexed(lambda m: ex.extremal_leading_coeffs(m)[1], start=0), name="extremal codes: next weight count"), 9, aliases=("fig4",)),
        Registered(S("A004009", 0, lambda c: list(e8_theta(c - 1).coeffs), name="E8 theta series"), 4, aliases=("e8",)),
        Registered(S("A008408", 0, lambda c: list(leech_theta(c - 1).coeffs), name="Leech lattice theta series"), 5, aliases=("leech",)),
        Registered(S("A000594", 1, ex.ramanujan_numbers, name="Ramanujan tau"), 10, aliases=("tau",)),
        Registered(S("A034597", 0, _indexed(lambda m: 1 if m == 0 else ex.shortest_vector_count(24 * m), start=0), name="extremal lattices: shortest vectors"), 6, aliases=("fig5",)),
        Registered(S("A011784", 1, _capped(levine_terms, 15), name="Levine's sequence"), 13, 15, ("levine",)),
        Registered(S("A007318", 0, lambda c: read_triangle_by_rows(PASCAL, c), name="Pascal's triangle by rows"), 15, aliases=("pascal",)),
        Registered(S("A003987", 0, lambda c: read_square_by_antidiagonals(NIM_TABLE, c), name="Nim-addition table by antidiagonals"), 15, aliases=("nim",)),
        Registered(S("A036262", 0, gilbreath_sequence, name="Gilbreath array by antidiagonals"), 16, aliases=("gilbreath",)),
        Registered(S("A035513", 0, wy.wythoff_antidiagonals, name="Wythoff array by antidiagonals"), 36, aliases=("wythoff",)),
        Registered(S("A000201", 1, wy.lower_wythoff_sequence, name="lower Wythoff sequence"), 8),
        Registered(S("A022342", 1, wy.fibonacci_successors, name="Fibonacci successors"), 7),
        Registered(S("A007067", 1, wy.non_successors, name="non-successors"), 5),
        Registered(S("A019586", 1, wy.para_fibonacci_vertical, name="vertical para-Fibonacci"), 23),
        Registered(S("A035612", 1, wy.para_fibonacci_horizontal, name="horizontal para-Fibonacci"), 23),
        Registered(S("A000364", 0, lambda c: bo.secant_tangent_numbers(c)[0], name="secant numbers"), 7, aliases=("secant",)),
        Registered(S("A000182", 1, lambda c: bo.secant_tangent_numbers(c)[1], name="tangent numbers"), 7, aliases=("tangent",)),
        Registered(S("A000111", 0, bo.entringer, name="Entringer numbers"), 10, aliases=("entringer",)),
        Registered(S("A000667", 0, lambda c: bo.boustrophedon_transform([1] * c), name="boustrophedon transform of all 1's"), 8),
        Registered(S("A000661", 0, lambda c: bo.eigen_shift_solver(2, c), name="shifts two places under boustrophedon"), 11),
        Registered(S("A003238", 1, bo.moebius_eigen_sequence, name="shifts under inverse Moebius"), 11),
        Registered(S("A028932", 0, _tchouka_numbers, name="Tchoukaillon winning positions"), 14, aliases=("tchouka",)),
        Registered(S("A028920", 1, tc.i_sequence, name="Tchoukaillon step holes"), 14),
        Registered(S("A002491", 1, _indexed(tc.t_by_rounding), name="t(n): first occurrences"), 11),
        Registered(S("A031363", 1, sd.mod5_square_indices_count, name="primes 2, 3 mod 5 to even powers"), 12),
        Registered(S("A036917", 0, sd.binomial_sum_A36917, name="sum C(2n-2k,n-k)^2 C(2k,k)^2"), 6),
        Registered(S("A046520", 1, sd.inequality_sequence_A46520, name="sigma - d - phi"), 15),
        Registered(S("A001405", 0, sd.central_binomials, name="C(n, floor(n/2))"), 11, aliases=("central",)),
    ] + [
        Registered(S(sd.normalize_id(seq_id), offset, None, terms, name), len(terms))
        for seq_id, (name, offset, terms) in he.stored_hard_data().items()
    ]


REGISTRY: dict[str, Registered] = {r.id: r for r in _entries()}
_ALIASES = {a: r.id for r in REGISTRY.values() for a in r.aliases}


def resolve(key: str) -> Registered:
    """Look up by id (any zero padding) or alias."""
    key = key.strip()
    if key.lower() in _ALIASES:
        return REGISTRY[_ALIASES[key.lower()]]
    try:
        return REGISTRY[sd.normalize_id(key)]
    except (KeyError, ValueError):
        raise KeyError(f"unknown sequence {key!r}") from None
