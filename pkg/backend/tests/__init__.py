"""Tests for the Gate Access Controller backend"""
