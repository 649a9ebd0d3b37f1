"""The fixbound command line."""
