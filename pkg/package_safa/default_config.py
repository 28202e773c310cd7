"""A Python module to define a class holding the package-wide settings.

Notes
-----
The environment variables SAFA_LOG_LEVEL, SAFA_ORACLE_MAX_DEPTH,
SAFA_ORACLE_MAX_STATES and SAFA_NUM_PROCESS are read once, when this module is
imported. `DefaultConfig.set_class_variable` overrides them afterwards.
"""

import os

from package_safa.common_types import Final
from package_safa.default_logger import DefaultLogger
from package_safa.utils_parallel import set_num_process

ENV_LOG_LEVEL: Final[str] = 'SAFA_LOG_LEVEL'
ENV_ORACLE_MAX_DEPTH: Final[str] = 'SAFA_ORACLE_MAX_DEPTH'
ENV_ORACLE_MAX_STATES: Final[str] = 'SAFA_ORACLE_MAX_STATES'
ENV_NUM_PROCESS: Final[str] = 'SAFA_NUM_PROCESS'


class DefaultConfig:
    """Class to hold the package-wide settings.

    Attributes
    ----------
    log_level : str
        The level of every package logger.
    oracle_max_depth : int
        The largest run-length bound accepted by the bounded-run oracle.
    oracle_max_states : int
        The largest abstract state space the bounded-run oracle builds.
    num_process : int
        The number of processes used for batch word classification.

    Examples
    --------
    >>> from package_safa.default_config import DefaultConfig
    >>> DefaultConfig.set_class_variable(oracle_max_depth=64)
    >>> DefaultConfig.oracle_max_depth
    64
    """

    log_level: str = 'WARNING'
    oracle_max_depth: int = 256
    oracle_max_states: int = 1 << 16
    num_process: int = 1

    __logger: DefaultLogger = DefaultLogger(__name__)

    @classmethod
    def set_class_variable(cls,
                           *,
                           log_level: str | None = None,
                           oracle_max_depth: int | None = None,
                           oracle_max_states: int | None = None,
                           num_process: int | None = None) -> None:
        """Set the class variables. Arguments left as None are unchanged.

        Parameters
        ----------
        log_level : str | None, optional, default None
            The level of every package logger.
        oracle_max_depth : int | None, optional, default None
            The largest run-length bound of the bounded-run oracle.
        oracle_max_states : int | None, optional, default None
            The largest abstract state space of the bounded-run oracle.
        num_process : int | None, optional, default None
            The number of processes for batch classification.

        Raises
        ------
        InvalidArgumentError
            If a numeric setting is not positive or the level is unknown.
        """

        if log_level is not None:
            DefaultLogger.set_level_all(log_level)
            cls.log_level = log_level.upper()

        for name, value in (('oracle_max_depth', oracle_max_depth),
                            ('oracle_max_states', oracle_max_states),
                            ('num_process', num_process)):
            if value is None:
                continue
            if value <= 0:
                cls.__logger.error(f'Invalid argument: {name} = {value}')
            setattr(cls, name, value)

    @classmethod
    def load_environment(cls) -> None:
        """Read the settings from the environment.

        Warnings
        --------
        Invalid environment value
            If a variable does not hold a positive integer or a level name;
            the default is kept.
        """

        cls.num_process = set_num_process()

        level: str | None = os.environ.get(ENV_LOG_LEVEL)
        if level is not None:
            try:
                cls.set_class_variable(log_level=level)
            except ValueError:
                cls.__logger.warning(
                    f'Invalid environment value: {ENV_LOG_LEVEL}={level}')

        for env_name, name in ((ENV_ORACLE_MAX_DEPTH, 'oracle_max_depth'),
                               (ENV_ORACLE_MAX_STATES, 'oracle_max_states'),
                               (ENV_NUM_PROCESS, 'num_process')):
            raw: str | None = os.environ.get(env_name)
            if raw is None:
                continue
            try:
                cls.set_class_variable(**{name: int(raw)})
            except ValueError:
                cls.__logger.warning(
                    f'Invalid environment value: {env_name}={raw}')


DefaultConfig.load_environment()
