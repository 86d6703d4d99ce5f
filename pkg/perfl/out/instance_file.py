from pathlib import Path

from numpy import array
from numpy import load
from numpy import savez

from perfl.core.errors import ConfigError
from perfl.core.problem import Problem
from perfl.losses.quadratic_loss import QuadraticLoss


def save_instance(problem: Problem, path: Path) -> None:
    """ Writes a quadratic problem as an .npz archive: A (n, d, d),
    b (n, d), mu_shift (n,) and the scalar lambda """

    if not problem.is_quadratic():
        raise ConfigError("only quadratic problems can be exported, got %r" % problem)

    losses = problem.losses

    with open(path, "wb") as stream:
        savez(
            stream,
            A=array([loss.A for loss in losses]),
            b=array([loss.b for loss in losses]),
            mu_shift=array([loss.mu_shift for loss in losses]),
            lam=array(problem.lam),
        )


def load_instance(path: Path, lam: float = None) -> Problem:
    """ Reads back an archive written by save_instance; lam overrides the stored lambda """

    path = Path(path)

    if not path.is_file():
        raise ConfigError("instance file not found: %s" % path)

    try:
        with load(path) as archive:
            A, b, mu_shift = archive["A"], archive["b"], archive["mu_shift"]
            stored = float(archive["lam"])
    except (KeyError, ValueError, OSError) as e:
        raise ConfigError("bad instance file %s: %s" % (path, e))

    if A.ndim != 3 or b.shape != A.shape[:2] or mu_shift.shape != A.shape[:1]:
        raise ConfigError("bad instance file %s: shapes %s, %s, %s" % (path, A.shape, b.shape, mu_shift.shape))

    losses = [QuadraticLoss(A[i], b[i], float(mu_shift[i])) for i in range(A.shape[0])]

    return Problem(losses, stored if lam is None else lam)
