######################################################################
# Copyright 2016, 2024 John J. Rofrano. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
# https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
######################################################################
"""
Module: error_handlers

Turns exceptions escaping a command into a payload and a process exit code.
Handlers are registered per exception type and looked up along the
exception's class hierarchy, most specific first.
"""
import logging
from typing import Callable

from socialrank.common import status
from socialrank.models import DataValidationError, ExpectationMismatch

logger = logging.getLogger("socialrank")

######################################################################
# Helpers
######################################################################
_STATUS_NAME_MAP = {
    getattr(status, name): " ".join(name.split("_")[2:]).title() for name in dir(status) if name.startswith("EXIT_")
}

_HANDLERS: dict[type, Callable] = {}


def errorhandler(exception_type: type):
    """Registers the decorated function for ``exception_type`` and its subclasses"""

    def register(function: Callable) -> Callable:
        _HANDLERS[exception_type] = function
        return function

    return register


def _make_error_payload(error) -> tuple[dict, int]:
    """Normalize different error types into a printable payload."""
    code = status.EXIT_70_INTERNAL_ERROR
    message = ""

    # Tuples/lists in the form (exit_code, message)
    if isinstance(error, (tuple, list)):
        if len(error) > 0 and isinstance(error[0], int):
            code = error[0]
        if len(error) > 1 and isinstance(error[1], str):
            message = error[1]

    # Any other exception or error object
    elif error is not None:
        message = str(error)

    payload = {
        "status": code,
        "error": _STATUS_NAME_MAP.get(code, "Unknown"),
        "message": message,
    }
    return payload, code


def _handle(error) -> tuple[dict, int]:
    payload, code = _make_error_payload(error)
    log = logger.error if payload["status"] == status.EXIT_70_INTERNAL_ERROR else logger.warning
    log(payload["message"])
    return payload, code


def handle(error: BaseException) -> tuple[dict, int]:
    """Dispatch to the handler registered for the closest class of ``error``"""
    for klass in type(error).__mro__:
        if klass in _HANDLERS:
            return _HANDLERS[klass](error)
    return _handle((status.EXIT_70_INTERNAL_ERROR, str(error)))


######################################################################
# Error Handlers
######################################################################
@errorhandler(DataValidationError)
def input_validation_error(error):
    """Handles malformed input as exit code 1"""
    return _handle((status.EXIT_1_INPUT_ERROR, str(error)))


@errorhandler(OSError)
def file_error(error):
    """Handles unreadable or unwritable files as exit code 1"""
    message = f"{error.filename}: {error.strerror}" if error.filename else str(error)
    return _handle((status.EXIT_1_INPUT_ERROR, message))


@errorhandler(ExpectationMismatch)
def expectation_mismatch(error):
    """Handles results that differ from their reference values as exit code 2"""
    return _handle((status.EXIT_3_EXPECTATION_MISMATCH, str(error)))


@errorhandler(Exception)
def internal_error(error):
    """Handles unexpected failures"""
    return _handle((status.EXIT_70_INTERNAL_ERROR, str(error)))
