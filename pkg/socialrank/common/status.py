# coding: utf8
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
"""
Descriptive process exit codes, for code readability.
Values above 64 follow sysexits(3).
"""

# Success
EXIT_0_SUCCESS = 0

# Caller errors
EXIT_1_INPUT_ERROR = 1
EXIT_2_USAGE_ERROR = 2  # raised by click for bad options
EXIT_3_EXPECTATION_MISMATCH = 3

# Failures - see sysexits(3)
EXIT_70_INTERNAL_ERROR = 70
