"""Sender and receiver workflows over files on disk."""
