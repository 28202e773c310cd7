"""A Python module to define a class for handling log messages."""

import logging

from package_safa.common_errors import (InvalidArgumentError, SafaError,
                                        VerificationError)
from package_safa.common_types import Any, NoReturn


class DefaultLogger:
    """Class to handle log messages.

    Every instance writes to stderr with the same format. The levels of all
    instances can be changed at once with `set_level_all`.

    Examples
    --------
    >>> from package_safa.default_logger import DefaultLogger
    >>> logger = DefaultLogger('my_logger')
    >>> logger.debug('This is a debug message.')
    >>> logger.info('This is an info message.')
    >>> logger.warning('This is a warning message.')
    >>> logger.error('Unknown letter: c')
    Traceback (most recent call last):
        ...
    package_safa.common_errors.InvalidArgumentError: Unknown letter: c
    >>> num_states = 2
    >>> logger.show_params(f'{num_states=}')
    """

    __default_level: int = logging.WARNING
    __names: set[str] = set()

    @classmethod
    def set_level_all(cls,
                      level: int | str) -> None:
        """Set the level of every logger created by this class, and the
        level of loggers created later.

        Parameters
        ----------
        level : int | str
            The logging level.

        Raises
        ------
        InvalidArgumentError
            If `level` is not a valid level name.
        """

        resolved: int = cls.__resolve_level(level)
        cls.__default_level = resolved

        for name in cls.__names:
            logger: logging.Logger = logging.getLogger(name)
            logger.setLevel(resolved)
            for handler in logger.handlers:
                handler.setLevel(resolved)

    @staticmethod
    def __resolve_level(level: int | str) -> int:
        """Convert a level name to its numeric value."""

        if isinstance(level, int):
            return level

        resolved: Any = logging.getLevelName(level.upper())
        if not isinstance(resolved, int):
            raise InvalidArgumentError(f'Invalid logging level: {level}')
        return resolved

    def __init__(self,
                 name: str,
                 level: int | str | None = None) -> None:
        """Initialize an instance of the DefaultLogger class.

        Parameters
        ----------
        name : str
            The name of the logger.
        level : int | str | None, optional, default None
            The logging level. The shared default level is used if None.

        Raises
        ------
        InvalidArgumentError
            If the level is not either 'DEBUG', 'INFO', 'WARNING', 'ERROR',
            or 'CRITICAL'.
        """

        resolved: int = DefaultLogger.__default_level if level is None \
            else DefaultLogger.__resolve_level(level)

        self.__logger: logging.Logger = logging.getLogger(name)
        self.__logger.setLevel(resolved)
        self.__logger.propagate = False
        DefaultLogger.__names.add(name)

        if not self.__logger.handlers:
            fmt: str = \
                '/%(levelname)s/ [%(asctime)s] %(name)s: %(message)s'
            handler: logging.StreamHandler = logging.StreamHandler()
            handler.setLevel(resolved)
            formatter: logging.Formatter = logging.Formatter(
                fmt=fmt, datefmt='%Y-%m-%d %H:%M:%S')
            handler.setFormatter(formatter)
            self.__logger.addHandler(handler)

    def debug(self,
              message: str) -> None:
        """Log a debug message.

        Parameters
        ----------
        message : str
            The message to log.
        """

        self.__logger.debug(message)

    def info(self,
             message: str) -> None:
        """Log an information message.

        Parameters
        ----------
        message : str
            The message to log.
        """

        self.__logger.info(message)

    def warning(self,
                message: str) -> None:
        """Log a warning message.

        Parameters
        ----------
        message : str
            The message to log.
        """

        self.__logger.warning(message)

    def error(self,
              message: str,
              error: type[SafaError] | SafaError = InvalidArgumentError) \
            -> NoReturn:
        """Log an error message and raise.

        Parameters
        ----------
        message : str
            The message to log.
        error : type[SafaError] | SafaError, optional, default
                InvalidArgumentError
            The exception raised, or its class (then built from `message`).

        Raises
        ------
        SafaError
            Always; an instance of `error`.
        """

        self.__logger.error(message)
        if isinstance(error, SafaError):
            raise error
        raise error(message)

    def critical(self,
                 message: str) -> NoReturn:
        """Log a critical message and raise.

        Parameters
        ----------
        message : str
            The message to log.

        Raises
        ------
        VerificationError
            Always.
        """

        self.__logger.critical(message)
        raise VerificationError(message)

    def show_params(self,
                    *args: Any) -> None:
        """Show the parameters.

        Parameters
        ----------
        *args
            The parameters to log.
        """

        self.__logger.info('----- Parameters -----')
        for parameter in args:
            parameter = str(parameter).replace('=', ' = ', 1)
            self.__logger.info(parameter)
        self.__logger.info('----------------------')
