"""
WSGI entry point serving the rootcount JSON/DOT API.

The counting itself is CPU-bound and single-threaded per request; run the
server with process workers rather than threads.
"""

import os

from django.core.wsgi import get_wsgi_application

os.environ.setdefault("DJANGO_SETTINGS_MODULE", "config.settings")

application = get_wsgi_application()
