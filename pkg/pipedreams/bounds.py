import contextlib
import contextvars

from django.conf import settings
from django.utils.translation import gettext_lazy as _


class BoundExceeded(ValueError):
    pass


_beyond_bound = contextvars.ContextVar("pipedream_beyond_bound", default=False)


@contextlib.contextmanager
def beyond_bound():
    """Allow enumeration past ``PIPEDREAM_MAX_N`` inside the block."""
    token = _beyond_bound.set(True)
    try:
        yield
    finally:
        _beyond_bound.reset(token)


def check_bound(n):
    if n < 1:
        raise ValueError(_("n must be positive."))
    if n > settings.PIPEDREAM_MAX_N and not _beyond_bound.get():
        raise BoundExceeded(
            _("n = %(n)s exceeds the enumeration bound %(bound)s; pass --force to go beyond it.")
            % {"n": n, "bound": settings.PIPEDREAM_MAX_N}
        )
