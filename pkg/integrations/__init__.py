"""
Front ends over the core library
- standalone: command-line tool
"""
