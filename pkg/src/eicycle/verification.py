"""Checking EI(H) = C_n and certifying that |E| is minimum."""
from __future__ import annotations

from dataclasses import dataclass

from .core import Edge, Hypergraph, degrees, ei, is_cycle
from .sections import profile


def lower_bound_uniform(k: int, n: int) -> int:
    """Every k-uniform H with EI(H) = C_n has at least ceil(3n/k) edges."""
    if k < 2 or n < 3:
        raise ValueError(f"need k >= 2 and n >= 3, got k={k}, n={n}")
    return -(-3 * n // k)


def lower_bound_32_only(n: int) -> int:
    """Edge floor when every hyperedge is a (3,2)-hyperedge."""
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    return -(-2 * n // 3)


@dataclass
class VerificationReport:
    n: int
    is_cycle: bool
    missing_edges: list[Edge]
    extra_edges: list[Edge]
    multiplicity: dict[Edge, int]
    degrees: dict[int, int]
    is_k_uniform: int | None
    is_3_regular: bool
    edge_count: int
    lower_bound_general: int | None
    lower_bound_32: int | None
    all_32: bool
    meets_lower_bound: bool
    minimality_certified: bool

    @property
    def min_degree(self) -> int:
        return min(self.degrees.values(), default=0)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "is_cycle": self.is_cycle,
            "missing_edges": [list(e) for e in self.missing_edges],
            "extra_edges": [list(e) for e in self.extra_edges],
            "multiplicity": [{"edge": list(e), "pairs": c} for e, c in sorted(self.multiplicity.items())],
            "degrees": {str(v): d for v, d in self.degrees.items()},
            "is_k_uniform": self.is_k_uniform,
            "is_3_regular": self.is_3_regular,
            "edge_count": self.edge_count,
            "lower_bound_general": self.lower_bound_general,
            "lower_bound_32": self.lower_bound_32,
            "all_32": self.all_32,
            "meets_lower_bound": self.meets_lower_bound,
            "minimality_certified": self.minimality_certified,
        }

    def render(self) -> str:
        fmt = lambda es: ", ".join("{" + ",".join(map(str, e)) + "}" for e in es) or "none"
        lines = [
            f"n = {self.n}, |E| = {self.edge_count}, uniformity = {self.is_k_uniform or 'mixed'}",
            f"EI(H) = C_{self.n}: {'yes' if self.is_cycle else 'NO'}",
        ]
        if not self.is_cycle:
            lines.append(f"  missing cycle edges: {fmt(self.missing_edges)}")
            lines.append(f"  extra edges: {fmt(self.extra_edges)}")
        multi = {e: c for e, c in self.multiplicity.items() if c > 1}
        if multi:
            lines.append("  multiply generated: " + ", ".join(
                "{" + ",".join(map(str, e)) + f"}} x{c}" for e, c in sorted(multi.items())))
        lines.append(f"degrees: min {self.min_degree}, max {max(self.degrees.values(), default=0)}; "
                     f"3-regular: {'yes' if self.is_3_regular else 'no'}")
        if self.lower_bound_general is not None:
            lines.append(f"lower bound ceil(3n/k) = {self.lower_bound_general}; "
                         f"meets it: {'yes' if self.meets_lower_bound else 'no'}")
        if self.lower_bound_32 is not None and self.all_32:
            lines.append(f"all hyperedges are (3,2): lower bound ceil(2n/3) = {self.lower_bound_32}")
        lines.append(f"minimality certified (3-regular, uniform, EI = C_n): "
                     f"{'yes' if self.minimality_certified else 'no'}")
        return "\n".join(lines)


def verify(h: Hypergraph, n: int | None = None) -> VerificationReport:
    n = h.n if n is None else n
    if n != h.n:
        raise ValueError(f"hypergraph has {h.n} vertices, asked to verify against C_{n}")
    r = ei(h)
    ok, diff = is_cycle(r, n)
    deg = degrees(h)
    k = h.uniformity()
    regular3 = bool(deg) and all(d == 3 for d in deg.values())
    lb = lower_bound_uniform(k, n) if k is not None and k >= 2 else None
    all_32 = k == 5 and n > 5 and len(h) > 0 and all(profile(e, n) == (3, 2) for e in h.edges)
    return VerificationReport(
        n=n,
        is_cycle=ok,
        missing_edges=diff.missing,
        extra_edges=diff.extra,
        multiplicity=dict(r.multiplicity),
        degrees=deg,
        is_k_uniform=k,
        is_3_regular=regular3,
        edge_count=len(h),
        lower_bound_general=lb,
        lower_bound_32=lower_bound_32_only(n) if k == 5 else None,
        all_32=all_32,
        meets_lower_bound=ok and lb is not None and len(h) == lb,
        minimality_certified=ok and k is not None and regular3,
    )
