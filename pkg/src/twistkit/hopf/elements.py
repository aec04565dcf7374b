"""Elements of tensor powers of a Hopf algebra, evaluated through their action.

Two families of elements share one interface:

* formal sums of word tuples over a WordHopfContext (HopfElement), and
* lazy products and inverses of other elements (Product, Inverse).

Every element has a number of legs and can be inflated by the coproduct
at a leg, hit by the counit at a leg, padded with unit legs, multiplied
and evaluated as a matrix on V^⊗(m_1+...+m_k) for leg widths (m_1..m_k).
A leg of width w carries the (w-1)-fold iterated coproduct; width 0 means
the counit is applied to that leg.
"""
from __future__ import annotations

from functools import reduce

from ..errors import InvalidWord, LegOutOfRange, SizeMismatch
from ..exactla import ONE, Matrix, Scalar, as_scalar


def kron_all(mats) -> Matrix:
    if not mats:
        return Matrix.identity(1)
    return reduce(lambda a, b: a.kron(b), mats)


class HopfExpr:
    """Common interface; subclasses set self.legs and self.context."""

    legs: int
    context: object

    def _matrix(self, widths: tuple) -> Matrix:
        raise NotImplementedError

    def matrix(self, widths=None) -> Matrix:
        if widths is None:
            widths = (1,) * self.legs
        widths = tuple(int(w) for w in widths)
        if len(widths) != self.legs:
            raise SizeMismatch(f"element has {self.legs} legs, got widths {widths}")
        if any(w < 0 for w in widths):
            raise SizeMismatch("leg widths must be nonnegative")
        cache = self.__dict__.setdefault("_mcache", {})
        m = cache.get(widths)
        if m is None:
            m = self._matrix(widths)
            cache[widths] = m
        return m

    def _check_inflate(self, i: int):
        if not 0 <= i <= self.legs + 1:
            raise LegOutOfRange(f"cannot inflate leg {i} of a {self.legs}-leg element")

    def _check_counit(self, i: int):
        if not 1 <= i <= self.legs:
            raise LegOutOfRange(f"no leg {i} on a {self.legs}-leg element")

    def pad(self, before: int, after: int) -> "HopfExpr":
        """Tensor with unit legs: 1^⊗before ⊗ self ⊗ 1^⊗after."""
        out = self
        for _ in range(before):
            out = out.inflate(0)
        for _ in range(after):
            out = out.inflate(out.legs + 1)
        return out

    def __matmul__(self, other):
        return NotImplemented

    def then(self, other: "HopfExpr") -> "HopfExpr":
        """The algebra product self·other, evaluated lazily."""
        return Product(self, other)

    def inverse(self) -> "HopfExpr":
        return Inverse(self)


class Product(HopfExpr):
    def __init__(self, a: HopfExpr, b: HopfExpr):
        if a.legs != b.legs:
            raise SizeMismatch(f"cannot multiply elements with {a.legs} and {b.legs} legs")
        self.a, self.b = a, b
        self.legs = a.legs
        self.context = a.context

    def _matrix(self, widths):
        return self.a.matrix(widths) @ self.b.matrix(widths)

    def inflate(self, i: int) -> HopfExpr:
        self._check_inflate(i)
        return Product(self.a.inflate(i), self.b.inflate(i))

    def counit_at(self, i: int) -> HopfExpr:
        self._check_counit(i)
        return Product(self.a.counit_at(i), self.b.counit_at(i))

    def inverse(self) -> HopfExpr:
        return Product(self.b.inverse(), self.a.inverse())

    def __repr__(self):
        return f"({self.a!r})·({self.b!r})"


class Inverse(HopfExpr):
    """x⁻¹, realized as the inverse of x's matrix on every widths."""

    def __init__(self, x: HopfExpr):
        self.x = x
        self.legs = x.legs
        self.context = x.context

    def _matrix(self, widths):
        return self.x.matrix(widths).inverse()

    def inflate(self, i: int) -> HopfExpr:
        self._check_inflate(i)
        return Inverse(self.x.inflate(i))

    def counit_at(self, i: int) -> HopfExpr:
        self._check_counit(i)
        return Inverse(self.x.counit_at(i))

    def inverse(self) -> HopfExpr:
        return self.x

    def __repr__(self):
        return f"({self.x!r})^-1"


class WordHopfContext:
    """A Hopf algebra given by generators acting on V.

    action maps each generator to its matrix on V, coproduct maps it to a
    list of (coefficient, left word, right word) with words tuples of
    generator names, and counit maps it to a scalar.  The axioms are not
    enforced here (see verify_coassociative and verify_counit_axiom) so
    that deliberately broken contexts can be represented.
    """

    def __init__(self, dim: int, action: dict, coproduct: dict, counit: dict, name: str = ""):
        self.dim = dim
        self.generators = tuple(action)
        for g, m in action.items():
            if m.shape != (dim, dim):
                raise SizeMismatch(f"action of {g} is not a {dim}x{dim} matrix")
        if set(coproduct) != set(action) or set(counit) != set(action):
            raise InvalidWord("action, coproduct and counit must cover the same generators")
        self.action = dict(action)
        self.coproduct = {g: [(as_scalar(c), tuple(l), tuple(r)) for c, l, r in terms]
                          for g, terms in coproduct.items()}
        for terms in self.coproduct.values():
            for _, l, r in terms:
                self.check_word(l)
                self.check_word(r)
        self.counit = {g: as_scalar(e) for g, e in counit.items()}
        self.name = name
        self._letters: dict = {}
        self._words: dict = {}

    def __repr__(self):
        return f"WordHopfContext({self.name or ','.join(self.generators)})"

    def check_word(self, word):
        for g in word:
            if g not in self.action:
                raise InvalidWord(f"unknown generator {g!r}")

    def letter_matrix(self, g, width: int) -> Matrix:
        key = (g, width)
        m = self._letters.get(key)
        if m is None:
            if width == 0:
                m = Matrix.identity(1, self.counit[g])
            elif width == 1:
                m = self.action[g]
            else:
                size = self.dim ** width
                m = Matrix.zeros(size, size)
                for c, left, right in self.coproduct[g]:
                    m = m + self.word_matrix(left, width - 1).kron(self.word_matrix(right, 1)).scale(c)
            self._letters[key] = m
        return m

    def word_matrix(self, word, width: int) -> Matrix:
        """Action of a word (product of generators, leftmost acting last) on V^⊗width."""
        word = tuple(word)
        key = (word, width)
        m = self._words.get(key)
        if m is None:
            self.check_word(word)
            if not word:
                m = Matrix.identity(self.dim ** width)
            elif len(word) == 1:
                m = self.letter_matrix(word[0], width)
            else:
                m = self.word_matrix(word[:-1], width) @ self.letter_matrix(word[-1], width)
            self._words[key] = m
        return m

    # element constructors
    def element(self, terms) -> "HopfElement":
        return HopfElement(self, terms)

    def gen(self, g) -> "HopfElement":
        self.check_word((g,))
        return HopfElement(self, [(ONE, ((g,),))])

    def unit(self, legs: int = 1) -> "HopfElement":
        return HopfElement(self, [(ONE, ((),) * legs)], legs=legs)

    def coproduct_word(self, word) -> list:
        """Δ of a word as a list of (coefficient, left word, right word)."""
        out = [(ONE, (), ())]
        for g in word:
            out = [(c * c2, l + l2, r + r2) for c, l, r in out for c2, l2, r2 in self.coproduct[g]]
        return out

    def counit_word(self, word) -> Scalar:
        out = ONE
        for g in word:
            out = out * self.counit[g]
        return out

    # axioms
    def verify_coassociative(self):
        """(Δ⊗id)Δ(g) and (id⊗Δ)Δ(g) agree as operators on V^⊗3, for every generator."""
        bad = []
        for g in self.generators:
            e = self.gen(g)
            if e.inflate(1).inflate(1).matrix() != e.inflate(1).inflate(2).matrix():
                bad.append(g)
        return bad

    def verify_counit_axiom(self):
        """(ε⊗id)Δ(g) and (id⊗ε)Δ(g) both act as g on V."""
        bad = []
        for g in self.generators:
            d = self.gen(g).inflate(1)
            if d.counit_at(1).matrix() != self.action[g] or d.counit_at(2).matrix() != self.action[g]:
                bad.append(g)
        return bad


class HopfElement(HopfExpr):
    """A formal sum of k-tuples of generator words."""

    def __init__(self, context: WordHopfContext, terms, legs: int | None = None):
        self.context = context
        collected: dict = {}
        for c, words in terms:
            c = as_scalar(c)
            words = tuple(tuple(w) for w in words)
            if legs is None:
                legs = len(words)
            elif len(words) != legs:
                raise SizeMismatch("all terms need the same number of legs")
            for w in words:
                context.check_word(w)
            y = collected.get(words)
            collected[words] = c if y is None else y + c
        self.terms = {w: c for w, c in collected.items() if c}
        self.legs = 0 if legs is None else legs

    def __repr__(self):
        parts = []
        for words, c in self.terms.items():
            body = "⊗".join("".join(w) or "1" for w in words)
            parts.append(f"{c}*{body}" if c != ONE else body)
        return " + ".join(parts) or "0"

    def _matrix(self, widths):
        size = self.context.dim ** sum(widths)
        out = Matrix.zeros(size, size)
        for words, c in self.terms.items():
            mats = [self.context.word_matrix(w, k) for w, k in zip(words, widths)]
            out = out + kron_all(mats).scale(c)
        return out

    def inflate(self, i: int) -> "HopfElement":
        self._check_inflate(i)
        if i == 0:
            return HopfElement(self.context, [(c, ((),) + w) for w, c in self.terms.items()], self.legs + 1)
        if i == self.legs + 1:
            return HopfElement(self.context, [(c, w + ((),)) for w, c in self.terms.items()], self.legs + 1)
        out = []
        for words, c in self.terms.items():
            for c2, left, right in self.context.coproduct_word(words[i - 1]):
                out.append((c * c2, words[:i - 1] + (left, right) + words[i:]))
        return HopfElement(self.context, out, self.legs + 1)

    def counit_at(self, i: int) -> "HopfElement":
        self._check_counit(i)
        out = [(c * self.context.counit_word(words[i - 1]), words[:i - 1] + words[i:])
               for words, c in self.terms.items()]
        return HopfElement(self.context, out, self.legs - 1)

    # formal algebra
    def __add__(self, other: "HopfElement") -> "HopfElement":
        if other.legs != self.legs:
            raise SizeMismatch("cannot add elements with different leg counts")
        return HopfElement(self.context, [(c, w) for w, c in self.terms.items()]
                           + [(c, w) for w, c in other.terms.items()], self.legs)

    def __neg__(self) -> "HopfElement":
        return self.scale(-1)

    def __sub__(self, other: "HopfElement") -> "HopfElement":
        return self + (-other)

    def scale(self, c) -> "HopfElement":
        c = as_scalar(c)
        return HopfElement(self.context, [(c * x, w) for w, x in self.terms.items()], self.legs)

    def __mul__(self, other):
        if isinstance(other, HopfElement):
            return formal_product(self, other)
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __rmul__(self, other):
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __matmul__(self, other: "HopfElement") -> "HopfElement":
        """Tensor product, legs of self first."""
        if not isinstance(other, HopfElement):
            return NotImplemented
        return HopfElement(self.context, [(a * b, u + v) for u, a in self.terms.items()
                                          for v, b in other.terms.items()], self.legs + other.legs)


def formal_product(a: HopfElement, b: HopfElement) -> HopfElement:
    """Legwise concatenation of words, expanded term by term."""
    if a.legs != b.legs:
        raise SizeMismatch(f"cannot multiply elements with {a.legs} and {b.legs} legs")
    terms = [(x * y, tuple(u + v for u, v in zip(wu, wv)))
             for wu, x in a.terms.items() for wv, y in b.terms.items()]
    return HopfElement(a.context, terms, a.legs)
