from perfl.core.errors import ConfigError
from perfl.core.solver_method import SolverMethod


def exchange_method(name: str) -> SolverMethod:
    name = name.strip().lower().replace("-", "_")

    if name == "pgd1":
        return SolverMethod.PGD1
    if name == "pgd2":
        return SolverMethod.PGD2
    if name == "apgd1":
        return SolverMethod.APGD1
    if name == "apgd2":
        return SolverMethod.APGD2
    if name == "iapgd_agd" or name == "iapgd":
        return SolverMethod.IAPGD_AGD
    if name == "iapgd_katyusha":
        return SolverMethod.IAPGD_KATYUSHA
    if name == "l2sgd_plus" or name == "l2sgd+":
        return SolverMethod.L2SGD_PLUS
    if name == "al2sgd_plus" or name == "al2sgd+":
        return SolverMethod.AL2SGD_PLUS

    raise ConfigError("unknown method %r" % name)
