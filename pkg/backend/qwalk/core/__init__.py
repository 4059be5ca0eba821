"""Configuration, logging, errors and execution helpers"""
