"""Test package for pcfu."""
