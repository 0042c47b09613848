"""Tests for the stegomatch package."""
