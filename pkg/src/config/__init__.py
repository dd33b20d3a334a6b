"""
Configuration for the dialogue synthesis pipeline.

- config.py: process-level settings from the environment (.env supported)
- pipeline_config.py: per-run JSON config with defaults and env overrides
"""
