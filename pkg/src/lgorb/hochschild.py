"""Chain-level word algebra for the orbifolded Fermat cubic.

Words live over the exterior algebra on three odd generators e1, e2, e3; a
letter is a subset of {1, 2, 3} (the empty subset is the unit), a tensor word
is a head letter followed by a list of letters.  Signs use shifted parities:
a letter of size s has shifted parity (s + 1) mod 2, so single generators are
shift-even and the unit and two-fold products are shift-odd.

``shuffle`` is the signed sum over order-preserving interleavings of two
letter lists; ``cyclic_shuffle`` additionally sums over cyclic rotations of
both factors, keeping the interleavings where the first factor's original
head precedes the second's, with rotation Koszul signs.  An empty factor acts
as the identity.

The canonical splitting of the two odd classes is a combination, over indices
i, j, k >= 0 and u-powers, of three word families built from these operations
with coefficients d_i = 1*4*...*(3i-2) and c_i = 2*5*...*(3i-1).  The
deformation-transport operator A acts on a finite catalog of indexed word
families by the rewrite rules

    A e123|sh(e1^I, e2^J, e3^K)        = e123|sh(e1^{I-1}, e2^{J-1}, e3^{K-1}),
    A e3|sh(e1|e2, e1^I, e2^J, e3^K)   = (I + 1/2) e3|sh(e1^I, e2^J, e3^{K-1})
                                         + e3|sh(e1|e2, e1^{I-1}, e2^{J-1}, e3^{K-1}),
    A 1|sh(e12|e3, e1^I, e2^J, e3^K)   = 1/2 e1|sh(e1^{I-1}, e2^J, e3^K)
                                         - 1/2 e2|sh(e1^I, e2^{J-1}, e3^K)
                                         + 1|sh(e12|e3, e1^{I-1}, e2^{J-1}, e3^{K-1})
                                         + 1|sh(e12, e1^{I-1}, e2^{J-1}, e3^K),

with any decrement below zero annihilating the term.  Auxiliary families
(heads e1, e2, e3, 1 without the e123 head) can never reach the length-one
word e123 that the flat-section series are read off from, so their onward
transport is truncated to zero; this reproduces the closed-form series and is
the extent of the catalog.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from .errors import WordOutsideCatalogError
from .series import FormalPowerSeries

Letter = tuple[int, ...]
WordSum = dict[tuple[Letter, ...], Fraction]

UNIT: Letter = ()
E1: Letter = (1,)
E2: Letter = (2,)
E3: Letter = (3,)
E12: Letter = (1, 2)
E123: Letter = (1, 2, 3)

# catalog word kinds
K_E123 = "e123_sh"          # e123 | sh(e1^I, e2^J, e3^K)
K_E3_BLOCK = "e3_block"     # e3   | sh(e1|e2, e1^I, e2^J, e3^K)
K_ONE_BLOCK = "one_block"   # 1    | sh(e12|e3, e1^I, e2^J, e3^K)
K_E1_PLAIN = "e1_sh"        # e1   | sh(e1^I, e2^J, e3^K)
K_E2_PLAIN = "e2_sh"
K_E3_PLAIN = "e3_sh"
K_ONE_SH12 = "one_sh12"     # 1    | sh(e12, e1^I, e2^J, e3^K)
K_E3_CYC = "e3_cyc"         # e3   | sh(sh^c(e1^I, e2^J), e3^K)
K_ONE_CYC = "one_cyc"       # 1    | sh^c(e12|sh(e1^I, e2^J), e3^K)
K_EXPANDED = "word"         # explicit letter tuple, outside the catalog

CATALOG_KINDS = {
    K_E123,
    K_E3_BLOCK,
    K_ONE_BLOCK,
    K_E1_PLAIN,
    K_E2_PLAIN,
    K_E3_PLAIN,
    K_ONE_SH12,
    K_E3_CYC,
    K_ONE_CYC,
}

Word = tuple  # (kind, I, J, K) or (K_EXPANDED, letters)

EXTRACTION_WORD: Word = (K_E123, 0, 0, 0)


def shifted_parity(letter: Letter) -> int:
    return (len(letter) + 1) % 2


def word_shifted_degree(letters) -> int:
    return sum(shifted_parity(l) for l in letters) % 2


def shuffle(w1, w2) -> WordSum:
    """Signed sum over interleavings of two letter lists, orders preserved."""
    w1 = tuple(w1)
    w2 = tuple(w2)
    out: WordSum = {}
    for word, sign, _, _ in _interleavings(w1, w2):
        out[word] = out.get(word, Fraction(0)) + sign
    return {w: c for w, c in out.items() if c}


def _interleavings(w1: tuple, w2: tuple, mark1: int = 0, mark2: int = 0):
    """Yield (word, sign, position of w1[mark1], position of w2[mark2]).

    Marks may be out of range when a factor is empty; the corresponding
    position is then -1.  Sign convention: drawing the next letter from w2
    moves it past everything remaining of w1.
    """

    def rec(i, j, acc, sign, pos1, pos2):
        if i == len(w1) and j == len(w2):
            yield tuple(acc), sign, pos1, pos2
            return
        if i < len(w1):
            p1 = len(acc) if i == mark1 else pos1
            acc.append(w1[i])
            yield from rec(i + 1, j, acc, sign, p1, pos2)
            acc.pop()
        if j < len(w2):
            rest = sum(shifted_parity(l) for l in w1[i:]) % 2
            s = sign * (-1 if (rest and shifted_parity(w2[j])) else 1)
            p2 = len(acc) if j == mark2 else pos2
            acc.append(w2[j])
            yield from rec(i, j + 1, acc, s, pos1, p2)
            acc.pop()

    yield from rec(0, 0, [], 1, -1, -1)


def _rotations(w: tuple):
    """All cyclic rotations with Koszul signs and the new index of w[0]."""
    n = len(w)
    for i in range(n):
        prefix, suffix = w[:i], w[i:]
        sign = -1 if (word_shifted_degree(prefix) and word_shifted_degree(suffix)) else 1
        yield suffix + prefix, sign, (n - i) % n


def cyclic_shuffle(w1, w2) -> WordSum:
    """Rotate both factors cyclically, then interleave.

    Kept interleavings are those where the original first letter of w1 ends
    up before the original first letter of w2.  An empty factor makes the
    operation the identity on the other.
    """
    w1 = tuple(w1)
    w2 = tuple(w2)
    if not w2:
        return {w1: Fraction(1)}
    if not w1:
        return {w2: Fraction(1)}
    out: WordSum = {}
    for r1, s1, pos1 in _rotations(w1):
        for r2, s2, pos2 in _rotations(w2):
            for word, sign, p1, p2 in _interleavings(r1, r2, pos1, pos2):
                if p1 < p2:
                    out[word] = out.get(word, Fraction(0)) + s1 * s2 * sign
    return {w: c for w, c in out.items() if c}


def multi_shuffle(words) -> WordSum:
    """Left fold of ``shuffle`` over a list of letter lists."""
    acc: WordSum = {(): Fraction(1)}
    for w in words:
        nxt: WordSum = {}
        for done, c in acc.items():
            for word, s in shuffle(done, tuple(w)).items():
                nxt[word] = nxt.get(word, Fraction(0)) + c * s
        acc = {w: c for w, c in nxt.items() if c}
    return acc


# ---------------------------------------------------------------------------
# chain combinations over the word catalog


@dataclass
class ChainCombination:
    """Map (word, u-exponent) -> t-polynomial with exact coefficients."""

    t_order: int
    terms: dict[tuple[Word, int], dict[int, Fraction]] = field(default_factory=dict)

    def add(self, word: Word, u_exp: int, t_exp: int, coeff: Fraction) -> None:
        if coeff == 0 or t_exp > self.t_order:
            return
        poly = self.terms.setdefault((word, u_exp), {})
        poly[t_exp] = poly.get(t_exp, Fraction(0)) + coeff
        if poly[t_exp] == 0:
            del poly[t_exp]
            if not poly:
                del self.terms[(word, u_exp)]

    def words(self) -> list[Word]:
        return [w for w, _ in self.terms]


def epsilon_counts(word: Word) -> tuple[int, int, int]:
    """Occurrences of e1, e2, e3 across all letters of a word."""
    kind = word[0]
    if kind == K_EXPANDED:
        letters = word[1]
        return tuple(sum(l.count(v) for l in letters) for v in (1, 2, 3))
    i, j, k = word[1], word[2], word[3]
    if kind in (K_E123, K_E3_BLOCK, K_ONE_BLOCK):
        return (i + 1, j + 1, k + 1)
    if kind == K_E1_PLAIN:
        return (i + 1, j, k)
    if kind == K_E2_PLAIN:
        return (i, j + 1, k)
    if kind in (K_E3_PLAIN, K_E3_CYC):
        return (i, j, k + 1)
    if kind in (K_ONE_SH12, K_ONE_CYC):
        return (i + 1, j + 1, k)
    raise WordOutsideCatalogError(f"unknown word kind {kind!r}")


def equivariance_check(c: ChainCombination) -> bool:
    """All words carry the same diagonal (Z/3)^3 character.

    The character of g = (t1, t2, t3) on a word is sum_i t_i * n_i mod 1
    with n_i the occurrence count of e_i, so equal characters for the whole
    group amount to componentwise equality of the counts mod 3.
    """
    seen = None
    for word, _ in c.terms:
        counts = tuple(v % 3 for v in epsilon_counts(word))
        if seen is None:
            seen = counts
        elif counts != seen:
            return False
    return True


def canonical_splitting(cls: str, t_order: int, u_order: int) -> ChainCombination:
    """Truncated explicit splitting of the class ``"s0"`` or ``"omega"``.

    Terms with u-exponent at most ``u_order`` are kept, term for term: the
    head family e123|sh(...) at u^{i+j+k} and the two auxiliary families at
    u^{i+j+k+1}.
    """
    if cls not in ("s0", "omega"):
        raise ValueError("class must be 's0' or 'omega'")
    comb = ChainCombination(t_order)
    d = _coefficient_table(cls, u_order + 1)
    for i in range(u_order + 1):
        for j in range(u_order + 1 - i):
            for k in range(u_order + 1 - i - j):
                base = d[i] * d[j] * d[k]
                sign = -1 if (i + j + k) % 2 else 1
                if cls == "s0":
                    fam1 = (K_E123, 3 * i, 3 * j, 3 * k)
                    fam2 = (K_E3_CYC, 3 * i + 1, 3 * j + 1, 3 * k)
                    fam3 = (K_ONE_CYC, 3 * i, 3 * j, 3 * k + 1)
                else:
                    fam1 = (K_E123, 3 * i + 1, 3 * j + 1, 3 * k + 1)
                    fam2 = (K_E3_CYC, 3 * i + 2, 3 * j + 2, 3 * k + 1)
                    fam3 = (K_ONE_CYC, 3 * i + 1, 3 * j + 1, 3 * k + 2)
                if i + j + k <= u_order:
                    comb.add(fam1, i + j + k, 0, Fraction(sign * base))
                if i + j + k + 1 <= u_order:
                    comb.add(fam2, i + j + k + 1, 0, Fraction(-sign * base))
                    comb.add(fam3, i + j + k + 1, 0, Fraction(sign * base))
    return comb


def _coefficient_table(cls: str, up_to: int) -> list[int]:
    """d_i = prod(3l - 2) for s0, c_i = prod(3l - 1) for omega."""
    table = [1]
    for l in range(1, up_to + 1):
        table.append(table[-1] * (3 * l - 2 if cls == "s0" else 3 * l - 1))
    return table


def a_action(c: ChainCombination) -> ChainCombination:
    """One application of the transport operator A over the catalog."""
    out = ChainCombination(c.t_order)
    for (word, u), poly in c.terms.items():
        kind = word[0]
        if kind == K_EXPANDED or kind not in CATALOG_KINDS:
            raise WordOutsideCatalogError(f"A is not defined on {word!r}")
        images = _a_images(word)
        for target, factor in images:
            for t_exp, coeff in poly.items():
                out.add(target, u, t_exp, coeff * factor)
    return out


def _a_images(word: Word) -> list[tuple[Word, Fraction]]:
    kind, i, j, k = word
    if kind == K_E123:
        if min(i, j, k) >= 1:
            return [((K_E123, i - 1, j - 1, k - 1), Fraction(1))]
        return []
    if kind == K_E3_BLOCK:
        images = []
        if k >= 1:
            images.append(((K_E3_PLAIN, i, j, k - 1), Fraction(2 * i + 1, 2)))
        if min(i, j, k) >= 1:
            images.append(((K_E3_BLOCK, i - 1, j - 1, k - 1), Fraction(1)))
        return images
    if kind == K_ONE_BLOCK:
        images = []
        if i >= 1:
            images.append(((K_E1_PLAIN, i - 1, j, k), Fraction(1, 2)))
        if j >= 1:
            images.append(((K_E2_PLAIN, i, j - 1, k), Fraction(-1, 2)))
        if min(i, j, k) >= 1:
            images.append(((K_ONE_BLOCK, i - 1, j - 1, k - 1), Fraction(1)))
        if min(i, j) >= 1:
            images.append(((K_ONE_SH12, i - 1, j - 1, k), Fraction(1)))
        return images
    # auxiliary families: transport truncated, cannot reach the e123 head
    return []


def flat_extension(cls: str, t_order: int) -> FormalPowerSeries:
    """Coefficient series of the flat extension at the extraction slot.

    Applies exp(t A / u) to the canonical splitting and reads the e123
    coefficient at u^0 (class "s0") or u^{-1} (class "omega").
    """
    target_u = 0 if cls == "s0" else -1
    comb = canonical_splitting(cls, t_order, u_order=t_order + 1)
    out = [Fraction(0)] * (t_order + 1)
    current = comb
    for m in range(t_order + 1):
        inv_fact = Fraction(1, factorial(m))
        for (word, u), poly in current.terms.items():
            if word == EXTRACTION_WORD and u - m == target_u:
                for t_exp, coeff in poly.items():
                    if t_exp + m <= t_order:
                        out[t_exp + m] += coeff * inv_fact
        if m < t_order:
            current = a_action(current)
    return FormalPowerSeries(tuple(out), t_order)


def expand(word: Word) -> WordSum:
    """Concrete letter words (head included) of one catalog word."""
    kind = word[0]
    if kind == K_EXPANDED:
        return {word[1]: Fraction(1)}
    i, j, k = word[1], word[2], word[3]
    e1s, e2s, e3s = (E1,) * i, (E2,) * j, (E3,) * k
    if kind == K_E123:
        return _with_head(E123, multi_shuffle([e1s, e2s, e3s]))
    if kind == K_E1_PLAIN:
        return _with_head(E1, multi_shuffle([e1s, e2s, e3s]))
    if kind == K_E2_PLAIN:
        return _with_head(E2, multi_shuffle([e1s, e2s, e3s]))
    if kind == K_E3_PLAIN:
        return _with_head(E3, multi_shuffle([e1s, e2s, e3s]))
    if kind == K_E3_BLOCK:
        return _with_head(E3, multi_shuffle([(E1, E2), e1s, e2s, e3s]))
    if kind == K_ONE_BLOCK:
        return _with_head(UNIT, multi_shuffle([(E12, E3), e1s, e2s, e3s]))
    if kind == K_ONE_SH12:
        return _with_head(UNIT, multi_shuffle([(E12,), e1s, e2s, e3s]))
    if kind == K_E3_CYC:
        out: WordSum = {}
        for w, c in cyclic_shuffle(e1s, e2s).items():
            for tail, s in shuffle(w, e3s).items():
                key = (E3,) + tail
                out[key] = out.get(key, Fraction(0)) + c * s
        return {w: c for w, c in out.items() if c}
    if kind == K_ONE_CYC:
        out = {}
        for w, c in multi_shuffle([e1s, e2s]).items():
            first = (E12,) + w
            for tail, s in cyclic_shuffle(first, e3s).items():
                key = (UNIT,) + tail
                out[key] = out.get(key, Fraction(0)) + c * s
        return {w: c for w, c in out.items() if c}
    raise WordOutsideCatalogError(f"unknown word kind {kind!r}")


def _with_head(head: Letter, tails: WordSum) -> WordSum:
    return {(head,) + tail: c for tail, c in tails.items()}
