"""Unit test package for morphocube."""
