"""Invertible polynomials: parsing, exponent matrices, atomic blocks, weights.

A polynomial ``W = sum c_i x^{r_i}`` in variables x1..xN is *invertible* when
it has exactly N terms, its NxN exponent matrix E (row i = exponent vector of
term i) is invertible over the rationals, and the weight system q solving
``E q = (1,...,1)^t`` lies in (0, 1/2]^N.  All invariants computed downstream
depend only on E, never on the coefficients, which may be arbitrary nonzero
rationals.

Every such matrix admitted here splits, after a simultaneous permutation of
monomials and variables, into three kinds of atomic blocks:

* Fermat  ``x^a``                         (1x1 block [a]),
* chain   ``x1^a1 + x1 x2^a2 + ... + x_{k-1} x_k^ak``   (lower bidiagonal),
* loop    ``x1^a1 x_k + x1 x2^a2 + ... + x_{k-1} x_k^ak`` (bidiagonal + corner).

Chain and loop inverses have entrywise closed forms; generic Gauss-Jordan
inversion is cross-checked against them whenever the block structure exists.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    ClosedFormMismatchError,
    InternalInvariantError,
    NotAtomicDecomposableError,
    NotSquareError,
    PolynomialSyntaxError,
    SingularExponentMatrixError,
    UnknownVariableError,
    WeightOutOfRangeError,
    ZeroPolynomialError,
)

Rows = tuple[tuple[Fraction, ...], ...]


@dataclass(frozen=True)
class Monomial:
    """x^r for a row vector r of non-negative integer exponents.

    The empty tuple is the monomial of the zero-variable ring (the unit); it
    occurs when a polynomial is restricted to an empty fixed locus.
    """

    exponents: tuple[int, ...]

    def __post_init__(self):
        if any(e < 0 for e in self.exponents):
            raise ValueError("exponents must be non-negative")

    def __len__(self) -> int:
        return len(self.exponents)

    def total_degree(self) -> int:
        return sum(self.exponents)


@dataclass(frozen=True)
class Polynomial:
    """Canonicalized term list: no repeated monomials, no zero coefficients.

    Terms are sorted in descending lexicographic order of exponent vectors.
    ``variable_count == 0`` with an empty term list is the legal zero-variable
    polynomial produced by restriction to an empty fixed locus.
    """

    terms: tuple[tuple[Fraction, Monomial], ...]
    variable_count: int

    def monomials(self) -> tuple[Monomial, ...]:
        return tuple(m for _, m in self.terms)

    def text(self) -> str:
        """Canonical textual form, parseable by :func:`parse_polynomial`."""
        if not self.terms:
            return "0"
        pieces = []
        for coef, mono in self.terms:
            powers = [
                f"x{i + 1}" + (f"^{e}" if e > 1 else "")
                for i, e in enumerate(mono.exponents)
                if e > 0
            ]
            body = "*".join(powers) if powers else "1"
            if coef == 1 and powers:
                term = body
            elif coef == -1 and powers:
                term = f"-{body}"
            else:
                term = f"{coef}*{body}" if powers else f"{coef}"
            if pieces and not term.startswith("-"):
                pieces.append("+")
            pieces.append(term)
        return "".join(pieces)


@dataclass(frozen=True)
class ExponentMatrix:
    """Square integer matrix whose rows are the exponent vectors of W."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.entries)
        if any(len(row) != n for row in self.entries):
            raise ValueError("exponent matrix must be square")

    @property
    def size(self) -> int:
        return len(self.entries)

    def determinant(self) -> int:
        return _int_determinant([list(r) for r in self.entries])

    def transpose(self) -> "ExponentMatrix":
        return ExponentMatrix(tuple(zip(*self.entries)) if self.entries else ())


@dataclass(frozen=True)
class Block:
    """One atomic block in canonical variable order.

    ``variable_indices`` are 1-based indices into the ambient variables; for a
    chain the head (pure power) variable comes first, for a loop the traversal
    starts at the smallest index of the cycle.  ``row_indices`` are the 0-based
    rows of the original exponent matrix owned by these variables, aligned.
    """

    kind: str  # "fermat" | "chain" | "loop"
    variable_indices: tuple[int, ...]
    exponents: tuple[int, ...]
    row_indices: tuple[int, ...]

    def canonical_matrix(self) -> tuple[tuple[int, ...], ...]:
        k = len(self.exponents)
        rows = [[0] * k for _ in range(k)]
        for i, a in enumerate(self.exponents):
            rows[i][i] = a
            if i > 0:
                rows[i][i - 1] = 1
        if self.kind == "loop":
            rows[0][k - 1] += 1
        return tuple(tuple(r) for r in rows)


@dataclass(frozen=True)
class AtomicDecomposition:
    """Blocks partitioning the variables, sorted by smallest original index."""

    blocks: tuple[Block, ...]
    source: ExponentMatrix

    @property
    def ambient_dim(self) -> int:
        return self.source.size

    def variable_order(self) -> tuple[int, ...]:
        return tuple(itertools.chain.from_iterable(b.variable_indices for b in self.blocks))

    def row_order(self) -> tuple[int, ...]:
        return tuple(itertools.chain.from_iterable(b.row_indices for b in self.blocks))

    def reassembled(self) -> tuple[tuple[int, ...], ...]:
        """Block-diagonal matrix rebuilt in the permuted order; used for audits."""
        n = self.ambient_dim
        rows = [[0] * n for _ in range(n)]
        offset = 0
        for b in self.blocks:
            cm = b.canonical_matrix()
            k = len(cm)
            for i in range(k):
                for j in range(k):
                    rows[offset + i][offset + j] = cm[i][j]
            offset += k
        return tuple(tuple(r) for r in rows)


@dataclass(frozen=True)
class WeightSystem:
    """Weights q with E q = (1,..,1)^t and the central charge sum(1 - 2q)."""

    weights: tuple[Fraction, ...]
    central_charge: Fraction

    @property
    def dimension(self) -> int:
        return len(self.weights)

    def milnor_number(self) -> int:
        """Product formula prod(1/q_j - 1); classical cross-check value."""
        mu = Fraction(1)
        for q in self.weights:
            mu *= 1 / q - 1
        if mu.denominator != 1 or mu <= 0:
            raise InternalInvariantError(
                f"product formula gave a non-integral Milnor number {mu}"
            )
        return int(mu)


# ---------------------------------------------------------------------------
# parsing


_TOKEN = re.compile(
    r"\s*(?:(?P<var>x(?P<idx>\d+))|(?P<num>\d+)|(?P<op>[-+*/^])|(?P<name>[A-Za-z_]\w*))"
)


def _tokenize(text: str) -> list[tuple[str, object, int]]:
    tokens: list[tuple[str, object, int]] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            bad = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise PolynomialSyntaxError(f"unexpected character {text[bad]!r}", bad)
        if m.group("var"):
            idx = int(m.group("idx"))
            start = m.start("var")
            if idx < 1:
                raise UnknownVariableError(m.group("var"), start)
            tokens.append(("var", idx, start))
        elif m.group("num"):
            tokens.append(("num", int(m.group("num")), m.start("num")))
        elif m.group("op"):
            tokens.append(("op", m.group("op"), m.start("op")))
        else:
            raise UnknownVariableError(m.group("name"), m.start("name"))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else ("end", None, len(self.text))

    def next(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expect_num(self, what: str) -> int:
        kind, val, pos = self.next()
        if kind != "num":
            raise PolynomialSyntaxError(f"expected {what}", pos)
        return val

    def parse(self) -> dict[tuple[int, ...], Fraction]:
        if not self.tokens:
            raise ZeroPolynomialError("empty polynomial text")
        terms: dict[tuple, Fraction] = {}
        max_var = 0
        sign = 1
        kind, val, pos = self.peek()
        if kind == "op" and val in "+-":
            self.next()
            sign = -1 if val == "-" else 1
        while True:
            coef, powers = self.parse_term()
            max_var = max([max_var, *powers.keys()]) if powers else max_var
            key = tuple(sorted(powers.items()))
            terms[key] = terms.get(key, Fraction(0)) + sign * coef
            kind, val, pos = self.peek()
            if kind == "end":
                break
            if kind == "op" and val in "+-":
                self.next()
                sign = -1 if val == "-" else 1
                continue
            raise PolynomialSyntaxError("expected '+' or '-' between terms", pos)
        out: dict[tuple[int, ...], Fraction] = {}
        for key, coef in terms.items():
            if coef == 0:
                continue
            exps = [0] * max_var
            for idx, e in key:
                exps[idx - 1] = e
            out[tuple(exps)] = coef
        if not out:
            raise ZeroPolynomialError("all terms cancelled")
        return out

    def parse_term(self) -> tuple[Fraction, dict[int, int]]:
        coef = Fraction(1)
        powers: dict[int, int] = {}
        kind, val, pos = self.peek()
        if kind == "num":
            self.next()
            num = val
            kind2, val2, _ = self.peek()
            if kind2 == "op" and val2 == "/":
                self.next()
                den = self.expect_num("denominator after '/'")
                if den == 0:
                    raise PolynomialSyntaxError("zero denominator", pos)
                coef = Fraction(num, den)
            else:
                coef = Fraction(num)
            kind2, val2, pos2 = self.peek()
            if kind2 == "op" and val2 == "*":
                self.next()
            elif kind2 in ("var", "num"):
                raise PolynomialSyntaxError("expected '*' after coefficient", pos2)
            else:
                return coef, powers  # bare constant term
        while True:
            kind, val, pos = self.next()
            if kind != "var":
                raise PolynomialSyntaxError("expected a variable power", pos)
            exp = 1
            kind2, val2, _ = self.peek()
            if kind2 == "op" and val2 == "^":
                self.next()
                _, _, epos = self.peek()
                exp = self.expect_num("integer exponent after '^'")
                if exp < 1:
                    raise PolynomialSyntaxError("exponent must be at least 1", epos)
            powers[val] = powers.get(val, 0) + exp
            kind2, val2, _ = self.peek()
            if kind2 == "op" and val2 == "*":
                self.next()
                continue
            return coef, powers


def parse_polynomial(text: str) -> Polynomial:
    """Parse ``x1^5+x2^5``-style text into a canonicalized :class:`Polynomial`.

    Terms are separated by + or -; a term is an optional rational coefficient
    (``p/q`` or an integer) followed by ``*``-separated powers ``xK^E`` (E may
    be omitted for exponent 1).  Whitespace is ignored.  The variable count is
    the largest index used.
    """
    table = _Parser(text).parse()
    n = len(next(iter(table)))
    terms = tuple(
        (coef, Monomial(exps))
        for exps, coef in sorted(table.items(), key=lambda kv: kv[0], reverse=True)
    )
    return Polynomial(terms, n)


# ---------------------------------------------------------------------------
# exact linear algebra on small integer / rational matrices


def _int_determinant(rows: list[list[int]]) -> int:
    """Fraction-free Bareiss determinant of a square integer matrix."""
    n = len(rows)
    if n == 0:
        return 1
    m = [row[:] for row in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def _invert_rational(rows: list[list[Fraction]]) -> list[list[Fraction]]:
    """Gauss-Jordan inverse; raises SingularExponentMatrixError if singular."""
    n = len(rows)
    aug = [row[:] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(rows)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise SingularExponentMatrixError("matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [v * inv for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


# ---------------------------------------------------------------------------
# invertibility, weights, transpose


def check_invertible(p: Polynomial) -> ExponentMatrix:
    """Validate invertibility of ``p`` and return its exponent matrix.

    Requires as many terms as variables, a nonsingular exponent matrix, and
    weights in (0, 1/2].  The zero-variable polynomial is invertible with the
    empty matrix by convention.
    """
    n = p.variable_count
    if n == 0 and not p.terms:
        return ExponentMatrix(())
    if not p.terms:
        raise ZeroPolynomialError("polynomial has no terms")
    if len(p.terms) != n:
        raise NotSquareError(
            f"{len(p.terms)} terms in {n} variables; an invertible polynomial needs exactly one term per variable"
        )
    e = ExponentMatrix(tuple(m.exponents for m in p.monomials()))
    if e.determinant() == 0:
        raise SingularExponentMatrixError("exponent matrix has determinant zero")
    weights(e)  # raises WeightOutOfRangeError when q leaves (0, 1/2]
    return e


def inverse_exponent_matrix(E: ExponentMatrix) -> Rows:
    """Exact rational inverse of E, cross-checked against closed forms.

    When E carries an atomic block structure, every chain or loop block of the
    generic inverse is compared entry-by-entry with the closed forms
    ``(E^-1)_{ij} = (-1)^{i+j} prod_{j<=l<=i} 1/a_l``  (chain, lower triangle)
    and the loop formula with determinant ``D = prod a_k - (-1)^k``; any
    mismatch raises :class:`ClosedFormMismatchError`.
    """
    if E.determinant() == 0:
        raise SingularExponentMatrixError("exponent matrix has determinant zero")
    inv = _invert_rational([[Fraction(v) for v in row] for row in E.entries])
    result = tuple(tuple(row) for row in inv)
    try:
        deco = decompose_atomic(E)
    except NotAtomicDecomposableError:
        return result
    for block in deco.blocks:
        closed = closed_form_block_inverse(block)
        if closed is None:
            continue
        k = len(block.exponents)
        for i in range(k):
            for j in range(k):
                # (E_c)^{-1}[i][j] = E^{-1}[variable of col i][row of mono j]
                got = result[block.variable_indices[i] - 1][block.row_indices[j]]
                if got != closed[i][j]:
                    raise ClosedFormMismatchError(
                        f"{block.kind} block {block.exponents}: inverse entry ({i},{j}) "
                        f"is {got}, closed form gives {closed[i][j]}"
                    )
    return result


def closed_form_block_inverse(block: Block) -> Rows | None:
    """Closed-form inverse of a chain or loop block (None for Fermat)."""
    a = block.exponents
    k = len(a)
    if block.kind == "fermat":
        return None
    if block.kind == "chain":
        rows = [[Fraction(0)] * k for _ in range(k)]
        for i in range(k):
            for j in range(i + 1):
                prod = Fraction(1)
                for l in range(j, i + 1):
                    prod /= a[l]
                rows[i][j] = (-1) ** (i + j) * prod
        return tuple(tuple(r) for r in rows)
    if block.kind == "loop":
        d = 1
        for v in a:
            d *= v
        d -= (-1) ** k
        rows = [[Fraction(0)] * k for _ in range(k)]
        for i in range(k):
            for j in range(k):
                if i < j:
                    prod = 1
                    for l in range(i + 1, j):
                        prod *= a[l]
                    rows[i][j] = Fraction((-1) ** (k + i + j) * prod, d)
                else:
                    prod = 1
                    for l in range(i + 1, k):
                        prod *= a[l]
                    for l in range(j):
                        prod *= a[l]
                    rows[i][j] = Fraction((-1) ** (i + j) * prod, d)
        return tuple(tuple(r) for r in rows)
    raise ValueError(f"unknown block kind {block.kind!r}")


def weights(E: ExponentMatrix) -> WeightSystem:
    """Solve E q = (1,..,1)^t exactly and validate q in (0, 1/2]^N."""
    n = E.size
    if n == 0:
        return WeightSystem((), Fraction(0))
    inv = _invert_rational([[Fraction(v) for v in row] for row in E.entries])
    q = tuple(sum(row) for row in inv)
    for j, qj in enumerate(q):
        if not (0 < qj <= Fraction(1, 2)):
            raise WeightOutOfRangeError(f"weight q_{j + 1} = {qj} lies outside (0, 1/2]")
    c = sum((1 - 2 * qj for qj in q), Fraction(0))
    return WeightSystem(q, c)


def transpose_polynomial(E: ExponentMatrix) -> ExponentMatrix:
    """Exponent matrix of the dual polynomial (the transpose of E)."""
    return E.transpose()


# ---------------------------------------------------------------------------
# atomic decomposition


def decompose_atomic(E: ExponentMatrix) -> AtomicDecomposition:
    """Exhibit E as a permuted block sum of Fermat, chain and loop blocks.

    Each monomial (row) must be a pure power ``x_v^a`` or ``x_u x_v^a``: the
    variable v carrying the top exponent is the row's *own* variable and u is
    its predecessor.  The predecessor edges u -> v must form a disjoint union
    of isolated points, simple paths and simple cycles; anything else raises
    :class:`NotAtomicDecomposableError`.  Rows like ``x_u x_v`` (both
    exponents 1) are matched by backtracking over the two possible owners.
    Blocks are reported sorted by their smallest original variable index,
    chains head first, loops starting at their smallest variable.
    """
    n = E.size
    if n == 0:
        return AtomicDecomposition((), E)
    candidates: list[list[tuple[int, int, int | None]]] = []  # (own, a, extra)
    for row in E.entries:
        supp = [j for j, v in enumerate(row) if v > 0]
        if len(supp) == 1:
            j = supp[0]
            candidates.append([(j, row[j], None)])
        elif len(supp) == 2:
            u, v = supp
            opts: list[tuple[int, int, int | None]] = []
            if row[v] >= 1 and row[u] == 1:
                opts.append((v, row[v], u))
            if row[u] >= 1 and row[v] == 1 and row[u] != row[v]:
                opts.append((u, row[u], v))
            if row[u] == 1 and row[v] == 1:
                opts = [(u, 1, v), (v, 1, u)]
            if not opts:
                raise NotAtomicDecomposableError(
                    f"row {row} is not of the form x_v^a or x_u x_v^a"
                )
            candidates.append(opts)
        else:
            raise NotAtomicDecomposableError(
                f"row {row} involves {len(supp)} variables; atomic rows involve at most 2"
            )

    assignment = _match_rows_to_variables(candidates, n)
    if assignment is None:
        raise NotAtomicDecomposableError("no bijection between monomials and variables exists")
    blocks = _blocks_from_assignment(assignment, n)
    return AtomicDecomposition(tuple(blocks), E)


def _match_rows_to_variables(
    candidates: list[list[tuple[int, int, int | None]]], n: int
) -> dict[int, tuple[int, int, int | None]] | None:
    """Backtracking search for an owner bijection that yields a valid shape.

    Returns {owner variable: (row, a, extra variable)} or None.  Rows with a
    unique owner candidate are forced; ambiguity only arises from exponent
    pattern (1, 1), so the search space is tiny.
    """

    order = sorted(range(n), key=lambda r: len(candidates[r]))

    def extend(k: int, owner_of: dict[int, tuple[int, int, int | None]]):
        if k == n:
            if _valid_shape(owner_of, n):
                return dict(owner_of)
            return None
        row = order[k]
        for own, a, extra in candidates[row]:
            if own in owner_of:
                continue
            owner_of[own] = (row, a, extra)
            found = extend(k + 1, owner_of)
            if found is not None:
                return found
            del owner_of[own]
        return None

    return extend(0, {})


def _valid_shape(owner_of: dict[int, tuple[int, int, int | None]], n: int) -> bool:
    out_degree = [0] * n
    for own, (_, _, extra) in owner_of.items():
        if extra is not None:
            out_degree[extra] += 1
    if any(d > 1 for d in out_degree):
        return False
    try:
        _blocks_from_assignment(owner_of, n)
    except NotAtomicDecomposableError:
        return False
    return True


def _blocks_from_assignment(
    owner_of: dict[int, tuple[int, int, int | None]], n: int
) -> list[Block]:
    successor: dict[int, int] = {}  # extra -> owner
    for own, (_, _, extra) in owner_of.items():
        if extra is not None:
            if extra in successor:
                raise NotAtomicDecomposableError(
                    f"variable x{extra + 1} feeds two different monomials"
                )
            successor[extra] = own

    seen: set[int] = set()
    blocks: list[Block] = []
    for start in range(n):
        if start in seen:
            continue
        # walk backwards to the head of the component containing `start`
        head = start
        trail = {start}
        while owner_of[head][2] is not None and owner_of[head][2] not in trail:
            head = owner_of[head][2]
            trail.add(head)
        if owner_of[head][2] is not None:
            # cycle: canonicalize to start at the smallest variable
            cycle = [head]
            v = successor.get(head)
            while v is not None and v != head:
                cycle.append(v)
                v = successor.get(v)
            if v is None or set(cycle) != trail | set(cycle):
                raise NotAtomicDecomposableError("predecessor edges do not close into a simple cycle")
            smallest = min(cycle)
            k = cycle.index(smallest)
            cycle = cycle[k:] + cycle[:k]
            exps = tuple(owner_of[v][1] for v in cycle)
            if owner_of[cycle[0]][2] != cycle[-1]:
                raise NotAtomicDecomposableError("loop orientation is inconsistent")
            seen.update(cycle)
            blocks.append(
                Block(
                    "loop",
                    tuple(v + 1 for v in cycle),
                    exps,
                    tuple(owner_of[v][0] for v in cycle),
                )
            )
            continue
        # path: follow successors from the head
        path = [head]
        v = successor.get(head)
        while v is not None:
            path.append(v)
            v = successor.get(v)
        seen.update(path)
        exps = tuple(owner_of[v][1] for v in path)
        if len(path) == 1:
            blocks.append(Block("fermat", (head + 1,), exps, (owner_of[head][0],)))
        else:
            if any(a < 2 for a in exps[:-1]):
                raise NotAtomicDecomposableError(
                    f"chain with exponents {exps}: only the tail exponent may be 1"
                )
            blocks.append(
                Block(
                    "chain",
                    tuple(v + 1 for v in path),
                    exps,
                    tuple(owner_of[v][0] for v in path),
                )
            )
    blocks.sort(key=lambda b: min(b.variable_indices))
    return blocks
