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
Common error handler and logging tests
"""

import logging
from unittest import TestCase
from unittest.mock import patch

from socialrank.common import error_handlers, log_handlers, status
from socialrank.models import DataValidationError, ExpectationMismatch, ParseError


class TestErrorHandlers(TestCase):
    """Unit tests for error handler behavior"""

    def test_input_validation_error(self):
        """DataValidationError should map to the input error code"""
        error = DataValidationError("invalid relation")
        with patch.object(error_handlers.logger, "warning") as mock_warning:
            payload, code = error_handlers.handle(error)

        mock_warning.assert_called_once_with("invalid relation")
        self.assertEqual(code, status.EXIT_1_INPUT_ERROR)
        self.assertEqual(payload["status"], status.EXIT_1_INPUT_ERROR)
        self.assertEqual(payload["error"], "Input Error")
        self.assertEqual(payload["message"], "invalid relation")

    def test_subclasses_use_the_closest_handler(self):
        """Subclasses of DataValidationError should map to the input error code"""
        with patch.object(error_handlers.logger, "warning"):
            payload, code = error_handlers.handle(ParseError("expected '}'", 2, 7))
        self.assertEqual(code, status.EXIT_1_INPUT_ERROR)
        self.assertEqual(payload["message"], "line 2, column 7: expected '}'")

    def test_file_error(self):
        """OSError should name the file"""
        error = FileNotFoundError(2, "No such file or directory", "missing.pr")
        with patch.object(error_handlers.logger, "warning") as mock_warning:
            payload, code = error_handlers.handle(error)

        mock_warning.assert_called_once_with("missing.pr: No such file or directory")
        self.assertEqual(code, status.EXIT_1_INPUT_ERROR)
        self.assertEqual(payload["message"], "missing.pr: No such file or directory")

    def test_expectation_mismatch(self):
        """ExpectationMismatch should map to its own exit code"""
        with patch.object(error_handlers.logger, "warning") as mock_warning:
            payload, code = error_handlers.handle(ExpectationMismatch("2 cells differ"))

        mock_warning.assert_called_once_with("2 cells differ")
        self.assertEqual(code, status.EXIT_3_EXPECTATION_MISMATCH)
        self.assertEqual(payload["error"], "Expectation Mismatch")

    def test_internal_error(self):
        """Unexpected errors should map to the internal error code and be logged as errors"""
        with patch.object(error_handlers.logger, "error") as mock_error:
            payload, code = error_handlers.handle(ValueError("unexpected failure"))

        mock_error.assert_called_once_with("unexpected failure")
        self.assertEqual(code, status.EXIT_70_INTERNAL_ERROR)
        self.assertEqual(payload["error"], "Internal Error")
        self.assertEqual(payload["message"], "unexpected failure")

    def test_make_error_payload_for_generic_exception(self):
        """Generic exceptions should fall back to the internal error code with str(error)"""
        payload, code = error_handlers._make_error_payload(ValueError("boom"))

        self.assertEqual(code, status.EXIT_70_INTERNAL_ERROR)
        self.assertEqual(payload["status"], status.EXIT_70_INTERNAL_ERROR)
        self.assertEqual(payload["error"], "Internal Error")
        self.assertEqual(payload["message"], "boom")

    def test_make_error_payload_for_tuples(self):
        """Tuples should carry their own exit code and message"""
        payload, code = error_handlers._make_error_payload((status.EXIT_0_SUCCESS, "done"))
        self.assertEqual(code, status.EXIT_0_SUCCESS)
        self.assertEqual(payload["error"], "Success")
        self.assertEqual(payload["message"], "done")


class TestLogHandlers(TestCase):
    """Logging set up"""

    def test_init_logging(self):
        """It should install one formatted handler however often it is called"""
        logger = log_handlers.init_logging("socialrank.test", logging.INFO)
        log_handlers.init_logging("socialrank.test", logging.DEBUG)
        self.assertEqual(len(logger.handlers), 1)
        self.assertFalse(logger.propagate)
        self.assertEqual(logger.level, logging.DEBUG)
        self.assertIn("%(levelname)s", logger.handlers[0].formatter._fmt)
