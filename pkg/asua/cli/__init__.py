"""CLI module for asua."""
