from perfl.core.client_pool import ClientPool
from perfl.core.oracle_ledger import OracleLedger
from perfl.core.problem import Problem
from perfl.core.solver_method import SolverMethod
from perfl.solvers.al2sgd_plus import Al2sgdPlus
from perfl.solvers.apgd1 import Apgd1
from perfl.solvers.apgd2 import Apgd2
from perfl.solvers.iapgd import IapgdAgd
from perfl.solvers.iapgd import IapgdKatyusha
from perfl.solvers.l2sgd_plus import L2sgdPlus
from perfl.solvers.pgd1 import Pgd1
from perfl.solvers.pgd2 import Pgd2
from perfl.solvers.reference import Reference
from perfl.solvers.solver_run import SolverRun
from perfl.solvers.trace import Trace


SOLVERS = {
    SolverMethod.PGD1: Pgd1,
    SolverMethod.PGD2: Pgd2,
    SolverMethod.APGD1: Apgd1,
    SolverMethod.APGD2: Apgd2,
    SolverMethod.IAPGD_AGD: IapgdAgd,
    SolverMethod.IAPGD_KATYUSHA: IapgdKatyusha,
    SolverMethod.L2SGD_PLUS: L2sgdPlus,
    SolverMethod.AL2SGD_PLUS: Al2sgdPlus,
}


def solve(problem: Problem, run: SolverRun, ledger: OracleLedger = None,
          reference: Reference = None, pool: ClientPool = None) -> Trace:
    return SOLVERS[run.method](problem, run, ledger, reference, pool).run()
