"""
Global Configuration for the social ranking toolkit
"""
import os
import logging

# Get configuration from environment
LOGGING_LEVEL = getattr(logging, os.getenv("LOG_LEVEL", "WARNING").upper(), logging.INFO)

# The class table holds 2^n entries
MAX_PLAYERS = int(os.getenv("SOCIALRANK_MAX_PLAYERS", "24"))

# `gen` prints a full .pr listing up to this many players, a class summary above it
FULL_LISTING_MAX_PLAYERS = int(os.getenv("SOCIALRANK_FULL_LISTING_MAX_PLAYERS", "12"))

# Axiom grid defaults
DEFAULT_SEED = int(os.getenv("SOCIALRANK_SEED", "7"))
DEFAULT_TRIALS = int(os.getenv("SOCIALRANK_TRIALS", "1000"))
DEFAULT_GRID_PLAYERS = int(os.getenv("SOCIALRANK_GRID_PLAYERS", "4"))
DEFAULT_WORKERS = int(os.getenv("SOCIALRANK_WORKERS", "1"))

# Random candidates tried before falling back to a constructive witness
WITNESS_ATTEMPTS = int(os.getenv("SOCIALRANK_WITNESS_ATTEMPTS", "8"))
