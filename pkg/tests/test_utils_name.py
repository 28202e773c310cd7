import pytest

from package_safa.common_errors import InvalidArgumentError
from package_safa.utils_name import (create_function_name_logger,
                                     get_current_function_name)


def test_get_current_function_name() -> None:
    assert get_current_function_name() == 'test_get_current_function_name'


def test_create_function_name_logger_raises_on_error() -> None:
    def union() -> None:
        create_function_name_logger().error('Alphabet mismatch')

    with pytest.raises(InvalidArgumentError, match='Alphabet mismatch'):
        union()
