from dataclasses import dataclass
from enum import Enum
from typing import Optional

from preference_domain_toolbox.core import Axis, PreferenceProfile


class Family(Enum):
    SINGLE_PEAKED = "single-peaked"
    SINGLE_CROSSING = "single-crossing"


class WitnessKind(Enum):
    WORST = "worst"
    ALPHA = "alpha"
    GAMMA = "gamma"
    DELTA = "delta"

    @property
    def family(self) -> Family:
        if self in (WitnessKind.WORST, WitnessKind.ALPHA):
            return Family.SINGLE_PEAKED
        return Family.SINGLE_CROSSING

    @property
    def voter_count(self) -> int:
        return {WitnessKind.WORST: 3, WitnessKind.ALPHA: 2, WitnessKind.GAMMA: 3, WitnessKind.DELTA: 4}[self]


# Search order inside each family. Delta comes before gamma: a profile can hold both, and
# the four-voter delta pattern is the one reported for it.
FAMILY_KINDS = {
    Family.SINGLE_PEAKED: (WitnessKind.WORST, WitnessKind.ALPHA),
    Family.SINGLE_CROSSING: (WitnessKind.DELTA, WitnessKind.GAMMA),
}


@dataclass(frozen=True)
class Witness:
    """
    Forbidden-subprofile certificate. Voters and alternatives are stored in role order:

    - WORST: voters (i, j, k), alternatives (a, b, c); i ranks a below b and c, j ranks b below
      a and c, k ranks c below a and b.
    - ALPHA: voters (i, j), alternatives (a, b, c, d); i: {a, b} > c > d, j: {b, d} > c > a.
    - GAMMA: voters (i, j, k), alternatives ((a, b), (c, d), (e, f));
      i: a>b, c>d, e>f; j: b>a, d>c, e>f; k: a>b, d>c, f>e.
    - DELTA: voters (i, j, k, l), alternatives ((a, b), (c, d));
      i: a>b, c>d; j: b>a, c>d; k: a>b, d>c; l: b>a, d>c.
    """

    kind: WitnessKind
    voters: tuple[int, ...]
    alternatives: tuple

    @property
    def family(self) -> Family:
        return self.kind.family

    def sort_key(self) -> tuple:
        flat = self.flat_alternatives()
        return (tuple(sorted(self.voters)), tuple(sorted(flat)), self.voters, flat)

    def flat_alternatives(self) -> tuple[int, ...]:
        if self.kind in (WitnessKind.GAMMA, WitnessKind.DELTA):
            return tuple(a for pair in self.alternatives for a in pair)
        return tuple(self.alternatives)

    def matches(self, profile: PreferenceProfile) -> bool:
        """Re-evaluates every comparison of the pattern against ``profile``."""
        if len(self.voters) != self.kind.voter_count or len(set(self.voters)) != len(self.voters):
            return False
        if any(not 1 <= v <= profile.n for v in self.voters):
            return False
        if any(not 1 <= a <= profile.n for a in self.flat_alternatives()):
            return False
        orders = [profile.order_of(v) for v in self.voters]
        match self.kind:
            case WitnessKind.WORST:
                a, b, c = self.alternatives
                if len({a, b, c}) != 3:
                    return False
                i, j, k = orders
                return (
                    i.prefers(b, a)
                    and i.prefers(c, a)
                    and j.prefers(a, b)
                    and j.prefers(c, b)
                    and k.prefers(a, c)
                    and k.prefers(b, c)
                )
            case WitnessKind.ALPHA:
                a, b, c, d = self.alternatives
                if len({a, b, c, d}) != 4:
                    return False
                i, j = orders
                return (
                    i.prefers(a, c)
                    and i.prefers(b, c)
                    and i.prefers(c, d)
                    and j.prefers(b, c)
                    and j.prefers(d, c)
                    and j.prefers(c, a)
                )
            case WitnessKind.GAMMA:
                (a, b), (c, d), (e, f) = self.alternatives
                if a == b or c == d or e == f:
                    return False
                i, j, k = orders
                return (
                    i.prefers(a, b)
                    and i.prefers(c, d)
                    and i.prefers(e, f)
                    and j.prefers(b, a)
                    and j.prefers(d, c)
                    and j.prefers(e, f)
                    and k.prefers(a, b)
                    and k.prefers(d, c)
                    and k.prefers(f, e)
                )
            case WitnessKind.DELTA:
                (a, b), (c, d) = self.alternatives
                if a == b or c == d:
                    return False
                i, j, k, l_ = orders
                return (
                    i.prefers(a, b)
                    and i.prefers(c, d)
                    and j.prefers(b, a)
                    and j.prefers(c, d)
                    and k.prefers(a, b)
                    and k.prefers(d, c)
                    and l_.prefers(b, a)
                    and l_.prefers(d, c)
                )
        return False

    def describe(self) -> str:
        voters = ",".join(str(v) for v in self.voters)
        match self.kind:
            case WitnessKind.WORST:
                alternatives = "alternatives {" + ",".join(str(a) for a in self.alternatives) + "}"
            case WitnessKind.ALPHA:
                alternatives = "alternatives (" + ",".join(str(a) for a in self.alternatives) + ")"
            case _:
                alternatives = "pairs " + ",".join("{" + f"{x},{y}" + "}" for x, y in self.alternatives)
        return f"{self.kind.value}-subprofile: {alternatives}; voters {voters}"

    def __str__(self):
        return self.describe()


@dataclass(frozen=True)
class RecognitionResult:
    """Outcome of an existential check: an axis certifies success, a witness certifies failure."""

    holds: bool
    axis: Optional[Axis] = None
    witness: Optional[Witness] = None

    def __bool__(self):
        return self.holds
