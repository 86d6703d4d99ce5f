from logging import debug

from numpy import ndarray

from perfl.core.communication_round import CommunicationRound
from perfl.core.errors import ParameterError
from perfl.core.stacked_point import StackedPoint
from perfl.solvers.loopless_estimator import aggregation_estimate
from perfl.solvers.loopless_estimator import expected_smoothness
from perfl.solvers.loopless_estimator import local_estimate
from perfl.solvers.solver import Solver


class LooplessSolver(Solver):
    """ Coins, estimator and anchor of the loopless local SGD family.

    Each iteration the coordinator flips xi ~ Bernoulli(p): on 1 the
    estimator uses the average x̄, on 0 every client samples one summand
    from its own stream. Afterwards xi' ~ Bernoulli(rho) moves the anchor w
    to the new point. A run of consecutive aggregation steps costs a single
    round, since the server keeps the averages between them; every anchor
    move costs one. The setup average is always charged; after it no
    iteration ends past max_comm. """

    PARAMETERS = frozenset({"p", "rho"})

    def on_start(self) -> StackedPoint:
        c = self.problem.constants
        lam = self.problem.lam
        n = self.problem.n

        self.p = float(self.config.param("p", lam / (lam + c.L_tilde)))

        if lam > 0 and not 0 < self.p < 1:
            raise ParameterError("p must lie in (0, 1), got %r" % self.p)

        if lam == 0 and not 0 <= self.p < 1:
            raise ParameterError("p must lie in [0, 1) when lambda = 0, got %r" % self.p)

        default_rho = self.p * (1 - self.p) or 1 / c.m
        self.rho = float(self.config.param("rho", default_rho))

        if not 0 < self.rho <= 1:
            raise ParameterError("rho must lie in (0, 1], got %r" % self.rho)

        self.smoothness = (lam + c.L_tilde) / n
        """ L_F, smoothness of F """

        self.expected = expected_smoothness(lam, c.L_tilde, n, self.p)
        """ expected smoothness of the estimator """

        self.w = self.config.x0.blocks.copy()
        self.anchor_grads = self.local_gradients(self.w)

        with CommunicationRound(self.ledger, "anchor average"):
            self.w_bar = self.w.mean(axis=0)

        self.aggregating = False

        return StackedPoint(self.w)

    def estimate(self, x: ndarray) -> ndarray:
        lam = self.problem.lam

        if self.coordinator.random() < self.p:
            if self.aggregating:
                x_bar = x.mean(axis=0)
            else:
                with CommunicationRound(self.ledger, "x average"):
                    x_bar = x.mean(axis=0)

            self.aggregating = True
            return aggregation_estimate(x, x_bar, self.w, self.w_bar, self.anchor_grads, lam, self.p)

        self.aggregating = False

        losses = self.problem.losses
        streams = self.client_streams
        m = self.problem.m
        w = self.w

        def sample(i: int):
            j = int(streams[i].integers(m))
            return losses[i].summand_grad(j, x[i]), losses[i].summand_grad(j, w[i])

        pairs = self.pool.map(sample, self.problem.n)
        self.ledger.charge_summand_grad(2)

        summands_x = StackedPoint([a for a, _ in pairs]).blocks
        summands_w = StackedPoint([b for _, b in pairs]).blocks

        return local_estimate(summands_x, summands_w, self.w, self.w_bar, self.anchor_grads, lam, self.p)

    def move_anchor(self, point: ndarray) -> None:
        refresh = self.coordinator.random() < self.rho

        # the run stops after this iteration; a refresh would overrun max_comm
        if refresh and self.ledger.comm_rounds >= self.config.max_comm:
            debug("anchor refresh dropped, communication budget spent")
            return

        if refresh:
            self.w = point.copy()
            self.anchor_grads = self.local_gradients(self.w)

            with CommunicationRound(self.ledger, "anchor average"):
                self.w_bar = self.w.mean(axis=0)
