"""
Main entry point for SalesBot.

Runs the dialogue synthesis command line: corpus generation, statistics,
training data export and the crowdsourcing evaluation kit.
"""

import logging
import sys

from src.cli import run
from src.config.config import config

# Configure logging
logging.basicConfig(
    level=logging.DEBUG if config.DEBUG else logging.INFO,
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
    handlers=[
        logging.StreamHandler(sys.stdout)
    ]
)


if __name__ == "__main__":
    sys.exit(run())
