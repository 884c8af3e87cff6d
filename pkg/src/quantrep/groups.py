"""Exact group theory for the mapping class group of the 4-punctured sphere.

The group splits as a semidirect product of a PSL(2, Z) quotient and a
Klein four-group N generated by n_a = s1 s3^{-1} and n_b = s2 s1 s3^{-1} s2^{-1}.
Tracking the permutation of punctures pins down the N-part (it is determined
by where puncture 4 is sent), and the matrix image pins down the quotient
part, so together they decide the word problem exactly. All arithmetic is
over Python integers, which are arbitrary precision, so no overflow handling
is needed for long words.
"""

from __future__ import annotations

from dataclasses import dataclass

from .m04 import MCGWord

# generator images in PSL(2, Z): s1, s3 -> A and s2 -> B
_A = ((1, 1), (0, 1))
_A_INV = ((1, -1), (0, 1))
_B = ((1, 0), (-1, 1))
_B_INV = ((1, 0), (1, 1))

_GEN_MATRIX = {
    (1, 1): _A,
    (1, -1): _A_INV,
    (2, 1): _B,
    (2, -1): _B_INV,
    (3, 1): _A,
    (3, -1): _A_INV,
}

IntMatrix = tuple[tuple[int, int], tuple[int, int]]


@dataclass(frozen=True)
class Perm4:
    """A permutation of the four punctures; images[j-1] is where j is sent."""

    images: tuple[int, int, int, int]

    def __post_init__(self):
        if sorted(self.images) != [1, 2, 3, 4]:
            raise ValueError(f"not a permutation of 1..4: {self.images}")

    def apply(self, j: int) -> int:
        return self.images[j - 1]

    def after(self, other: "Perm4") -> "Perm4":
        """Composition self . other (other applied first)."""
        return Perm4(tuple(self.apply(other.apply(j)) for j in range(1, 5)))

    @property
    def is_identity(self) -> bool:
        return self.images == (1, 2, 3, 4)


IDENTITY_PERM4 = Perm4((1, 2, 3, 4))


def _transposition(i: int) -> Perm4:
    images = [1, 2, 3, 4]
    images[i - 1], images[i] = images[i], images[i - 1]
    return Perm4(tuple(images))


@dataclass(frozen=True)
class PSL2ZElement:
    """An element of PSL(2, Z) stored by its canonical integer representative.

    Of the two integer lifts +-M, the one whose first nonzero entry in
    row-major order is positive is kept, so equality is plain tuple equality.
    """

    matrix: IntMatrix

    def __post_init__(self):
        (a, b), (c, d) = self.matrix
        if a * d - b * c != 1:
            raise ValueError(f"determinant != 1: {self.matrix}")

    @staticmethod
    def from_matrix(mat: IntMatrix) -> "PSL2ZElement":
        flat = (mat[0][0], mat[0][1], mat[1][0], mat[1][1])
        for entry in flat:
            if entry != 0:
                if entry < 0:
                    mat = tuple(tuple(-x for x in row) for row in mat)
                break
        return PSL2ZElement(matrix=mat)

    def __mul__(self, other: "PSL2ZElement") -> "PSL2ZElement":
        return PSL2ZElement.from_matrix(_mat_mul(self.matrix, other.matrix))

    @property
    def is_identity(self) -> bool:
        return self.matrix == ((1, 0), (0, 1))


PSL2Z_IDENTITY = PSL2ZElement.from_matrix(((1, 0), (0, 1)))


def _mat_mul(m: IntMatrix, n: IntMatrix) -> IntMatrix:
    return tuple(
        tuple(sum(m[i][k] * n[k][j] for k in range(2)) for j in range(2))
        for i in range(2)
    )


def perm_of_word(word: MCGWord) -> Perm4:
    """Puncture permutation of a word, letters composed in word order.

    The word maps to the composition of its letter transpositions with the
    rightmost letter applied first, mirroring the matrix-product convention.
    """
    perm = IDENTITY_PERM4
    for i, _exp in word.letters:
        perm = perm.after(_transposition(i))
    return perm


def psl2z_image(word: MCGWord) -> PSL2ZElement:
    """Image of a word in PSL(2, Z) via s1, s3 -> A and s2 -> B."""
    mat = ((1, 0), (0, 1))
    for letter in word.letters:
        mat = _mat_mul(mat, _GEN_MATRIX[letter])
    return PSL2ZElement.from_matrix(mat)


N_PART_BY_P4 = {4: "1", 3: "n_a", 2: "n_b", 1: "n_a n_b"}


@dataclass(frozen=True)
class Decomposition:
    """Semidirect-product coordinates of a word: quotient matrix and N-part."""

    g_matrix: PSL2ZElement
    n_part: str

    def __post_init__(self):
        if self.n_part not in N_PART_BY_P4.values():
            raise ValueError(f"unknown N-part label {self.n_part!r}")


def semidirect_decompose(word: MCGWord) -> Decomposition:
    """Split a word into its PSL(2, Z) part and its Klein four-group part.

    The four elements of N are distinguished by where they send puncture 4
    (identity fixes it, n_a sends it to 3, n_b to 2, n_a n_b to 1), and the
    quotient part is the matrix image, which kills N.
    """
    dest = perm_of_word(word).apply(4)
    return Decomposition(g_matrix=psl2z_image(word), n_part=N_PART_BY_P4[dest])


def word_problem(word: MCGWord) -> bool:
    """Exact triviality test: true iff the word is the identity mapping class.

    A word is trivial iff both semidirect coordinates are trivial: the
    matrix image is the identity in PSL(2, Z) and puncture 4 is fixed.
    """
    if perm_of_word(word).apply(4) != 4:
        return False
    return psl2z_image(word).is_identity


def presentation_check() -> dict[str, bool]:
    """Exact integer checks of the presentation bookkeeping.

    Verifies the braid relation for A, B, the order of the torsion elements
    S = AB and T = ABA, and that the substitutions between the (a, b) and
    (s, t) generating sets invert each other on matrices.
    """
    ident = ((1, 0), (0, 1))
    neg_ident = ((-1, 0), (0, -1))
    aba = _mat_mul(_mat_mul(_A, _B), _A)
    bab = _mat_mul(_mat_mul(_B, _A), _B)
    s = _mat_mul(_A, _B)
    t = aba
    s3 = _mat_mul(_mat_mul(s, s), s)
    t2 = _mat_mul(t, t)
    aba4 = _mat_mul(t2, t2)
    # substitutions a = s^{-1} t, b = t^{-1} s^2 must recover A and B
    s_inv = ((1, -1), (1, 0))  # inverse of AB = [[0,1],[-1,1]]
    t_inv = ((0, -1), (1, 0))
    a_back = _mat_mul(s_inv, t)
    b_back = _mat_mul(t_inv, _mat_mul(s, s))
    return {
        "braid_relation_ABA_BAB": aba == bab,
        "ABA_equals_BAB_value": aba == ((0, 1), (-1, 0)),
        "torsion_(ABA)^4": aba4 == ident,
        "torsion_S^3": s3 == neg_ident,
        "torsion_T^2": t2 == neg_ident,
        "substitution_roundtrip": a_back == _A and b_back == _B,
    }
