"""
Standalone version: command-line tool
"""
