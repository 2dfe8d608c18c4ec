"""
CLI commands
"""
# Commands are imported directly in cli.py
