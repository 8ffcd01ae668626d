import os
import sys

# the package is imported as `utils.<module>`, same as the CLI does
sys.path.insert(0, os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "app"))
