"""
Data Transfer Objects for the Kummer criterion and the structural checks.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from src.common.exceptions.exceptions import AlgebraException
from src.domain.models.algebra import AlgebraShape, ExponentVector, product_exponent
from src.domain.models.cyclotomic import CyclotomicInteger
from src.domain.models.kummer_graph import BlockType


@dataclass(frozen=True)
class MultisetSpec:
    """
    A multiset v_1^{d_1} ... v_m^{d_m} with sum d_j = d.

    Attributes:
        elements: Distinct monomials, in reference order
        multiplicities: Positive counts, one per element
    """
    elements: Tuple[ExponentVector, ...]
    multiplicities: Tuple[int, ...]

    @property
    def items(self) -> List[Tuple[ExponentVector, int]]:
        return list(zip(self.elements, self.multiplicities))


@dataclass(frozen=True)
class KummerViolation:
    """
    Certificate that a set is not Kummer.

    Attributes:
        subset: Offending elements (reference order)
        multiplicities: The composition of d that fails
        coefficient: Nonzero symmetric-product coefficient
        exponent: Nonzero exponent of the product
    """
    subset: Tuple[ExponentVector, ...]
    multiplicities: Tuple[int, ...]
    coefficient: CyclotomicInteger
    exponent: ExponentVector

    def to_dict(self) -> Dict:
        """Convert the certificate to a JSON-ready dictionary."""
        return {
            "subset": [list(v.entries) for v in self.subset],
            "multiplicities": list(self.multiplicities),
            "coefficient": self.coefficient.to_list(),
            "coefficient_text": self.coefficient.render(),
            "exponent": list(self.exponent.entries),
        }

    def verify(self, shape: AlgebraShape, vectors: Sequence[ExponentVector]) -> bool:
        """
        Recompute the certificate against the set it claims to refute.

        Args:
            shape: Algebra shape
            vectors: The set that was tested

        Returns:
            bool: True iff the subset lies in ``vectors``, the multiplicities
            sum to d, and both the recomputed coefficient and the product
            exponent match the stored ones and are nonzero
        """
        # Deferred: the criterion module imports this one
        from src.application.services.kummer_criterion import symmetric_coefficient

        members = set(vectors)
        if not self.subset or any(v not in members for v in self.subset):
            return False
        if len(self.multiplicities) != len(self.subset) or sum(self.multiplicities) != shape.degree:
            return False
        spec = MultisetSpec(self.subset, self.multiplicities)
        try:
            coefficient = symmetric_coefficient(shape, spec)
            exponent = product_exponent(shape, spec.items)
        except AlgebraException:
            return False
        return (coefficient == self.coefficient and not coefficient.is_zero()
                and exponent == self.exponent and not exponent.is_zero())

    @classmethod
    def from_dict(cls, shape: AlgebraShape, data: Dict) -> 'KummerViolation':
        """Rebuild a certificate; ``verify`` re-checks it against the criterion."""
        return cls(
            subset=tuple(shape.vector(v) for v in data["subset"]),
            multiplicities=tuple(int(m) for m in data["multiplicities"]),
            coefficient=CyclotomicInteger(shape.degree, tuple(int(c) for c in data["coefficient"])),
            exponent=shape.vector(data["exponent"]),
        )


@dataclass(frozen=True)
class CheckResult:
    """
    Outcome of a structural check on a graph.

    Attributes:
        check: Check identifier (see LemmaNames)
        witness: Vertex indices of the obstruction, None when the check passes
        detail: Short explanation of the witness
    """
    check: str
    witness: Optional[Tuple[int, ...]] = None
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.witness is None

    def to_dict(self) -> Dict:
        return {
            "check": self.check,
            "ok": self.ok,
            "witness": None if self.witness is None else list(self.witness),
            "detail": self.detail,
        }


@dataclass(frozen=True)
class TopologicalOrder:
    """
    Result of ordering an arrow tournament.

    Exactly one of ``order`` and ``cycle`` is set.
    """
    order: Optional[Tuple[int, ...]] = None
    cycle: Optional[Tuple[int, ...]] = None

    @property
    def ok(self) -> bool:
        return self.order is not None


@dataclass(frozen=True)
class BlockRow:
    """One a-priori block configuration with its classification."""
    orientations: Tuple[int, int, int]
    block_type: str
    forbidden_quad: bool

    @property
    def consistent(self) -> bool:
        return (self.block_type == BlockType.FORBIDDEN.value) == self.forbidden_quad


@dataclass
class LemmaReport:
    """
    Outcome of running the structural checks over a family of Kummer sets.

    Attributes:
        instances: Number of sets checked
        checked: Sets examined per check
        violations: Failing sets per check
        failures: (set, CheckResult) for every failure, in encounter order
        blocks: The a-priori block table
    """
    instances: int = 0
    checked: Dict[str, int] = field(default_factory=dict)
    violations: Dict[str, int] = field(default_factory=dict)
    failures: List[Tuple[Tuple[ExponentVector, ...], CheckResult]] = field(default_factory=list)
    blocks: List[BlockRow] = field(default_factory=list)

    def record(self, members: Tuple[ExponentVector, ...], result: CheckResult) -> None:
        self.checked[result.check] = self.checked.get(result.check, 0) + 1
        self.violations.setdefault(result.check, 0)
        if not result.ok:
            self.violations[result.check] += 1
            self.failures.append((members, result))

    @property
    def admissible_blocks(self) -> int:
        return sum(1 for row in self.blocks if row.block_type != BlockType.FORBIDDEN.value)

    @property
    def total_violations(self) -> int:
        return sum(self.violations.values()) + sum(1 for row in self.blocks if not row.consistent)

    def to_dict(self) -> Dict:
        return {
            "instances": self.instances,
            "checks": {name: {"checked": self.checked[name], "violations": self.violations[name]}
                       for name in self.checked},
            "failures": [{"set": [list(v.entries) for v in members], **result.to_dict()}
                         for members, result in self.failures],
            "blocks": [{"orientations": list(row.orientations), "type": row.block_type,
                        "forbidden_quad": row.forbidden_quad} for row in self.blocks],
            "admissible_blocks": self.admissible_blocks,
            "total_violations": self.total_violations,
        }
