from perfl.core.errors import ConfigError
from perfl.core.stop_criterion import StopCriterion
from perfl.data.split_mode import SplitMode


def exchange_split_mode(name: str) -> SplitMode:
    name = name.strip().lower()

    if name == "homogeneous":
        return SplitMode.HOMOGENEOUS
    if name == "heterogeneous":
        return SplitMode.HETEROGENEOUS

    raise ConfigError("unknown split mode %r" % name)


def exchange_stop_on(name: str) -> StopCriterion:
    name = name.strip().lower()

    if name == "rel_subopt":
        return StopCriterion.REL_SUBOPT
    if name == "dist" or name == "distance":
        return StopCriterion.DISTANCE
    if name == "gradient_norm":
        return StopCriterion.GRADIENT_NORM

    raise ConfigError("unknown stop criterion %r" % name)
