from logging import debug

from perfl.core.oracle_ledger import OracleLedger


class CommunicationRound(object):
    """ Scope of one cross-client average; charges the ledger on entry """

    def __init__(self, ledger: OracleLedger, what: str) -> None:
        self.ledger = ledger
        self.what = what

    def __enter__(self):
        self.ledger.communicate()
        debug("enter round %d: %s", self.ledger.comm_rounds, self.what)

        return self

    def __exit__(self, exc_type, exc_value, traceback) -> None:
        if exc_type is not None:
            debug("round %d aborted: %s", self.ledger.comm_rounds, exc_value)
            return

        debug("exit round %d", self.ledger.comm_rounds)
