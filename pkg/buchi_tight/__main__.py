# -*- coding: utf-8 -*-
import sys

from buchi_tight.cli import main

sys.exit(main())
