#!/usr/bin/env python3
"""
Adaptive Fréchet - Entry Point
Discrete Fréchet distance by banded, thresholded dynamic programming
"""

import sys

from dotenv import load_dotenv

# Load environment variables
load_dotenv()

# Import and run the command line
from app.main import main

if __name__ == "__main__":
    sys.exit(main())
