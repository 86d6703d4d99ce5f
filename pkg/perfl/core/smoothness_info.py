from dataclasses import dataclass

from perfl.core.errors import ParameterError


# relative slack for constants estimated by eigensolves
TOLERANCE = 1e-9


@dataclass(frozen=True)
class SmoothnessInfo(object):
    """ Curvature constants shared by every local loss of a problem """

    mu: float
    """ strong convexity of each f_i """

    L: float
    """ smoothness of each f_i """

    L_tilde: float
    """ smoothness of each summand of f_i """

    m: int = 1
    """ summands per client, 1 when f_i is not a finite sum """

    def __post_init__(self) -> None:
        if not self.mu > 0:
            raise ParameterError("mu must be positive, got %r" % self.mu)

        if self.m < 1:
            raise ParameterError("m must be at least 1, got %r" % self.m)

        slack = 1 + TOLERANCE

        if not (self.L_tilde * slack >= self.L
                and self.L * slack >= self.L_tilde / self.m
                and self.L * slack >= self.mu):
            raise ParameterError(
                "inconsistent constants: need L_tilde >= L >= L_tilde/m and L >= mu, got "
                "mu=%r L=%r L_tilde=%r m=%d" % (self.mu, self.L, self.L_tilde, self.m))

    @classmethod
    def combine(cls, infos: list["SmoothnessInfo"]) -> "SmoothnessInfo":
        """ Uniform constants valid for every client """

        ms = {info.m for info in infos}
        if len(ms) != 1:
            raise ParameterError("clients disagree on summand count: %s" % sorted(ms))

        return cls(
            mu=min(info.mu for info in infos),
            L=max(info.L for info in infos),
            L_tilde=max(info.L_tilde for info in infos),
            m=ms.pop(),
        )
