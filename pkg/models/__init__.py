# Value types shared across services and utils.
from models.coin_set import CoinSet, new_coin_set, reduced  # noqa: F401
from models.errors import QuasiCoinError, VerificationError  # noqa: F401
