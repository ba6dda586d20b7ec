"""Observer hooks for long-running computations.

The suite runner fires an Event for every finished IdentityReport so a
caller can print progress or collect results while tuples are still being
verified.
"""

import contextlib
import logging

logger = logging.getLogger(__name__)


class Event(object):

    """Named hook with an ordered list of observer callbacks."""

    def __init__(self, name):
        self._name = str(name)
        self._observers = []
        self._fire_count = 0

    @property
    def fire_count(self):
        """Number of times the event has fired."""
        return self._fire_count

    def add_observer(self, callback):
        """Add an observer callback.

        Raises ValueError if the callback has already been added.
        """
        if callback in self._observers:
            raise ValueError('{} is already an observer of {}'
                             .format(callback, self))
        self._observers.append(callback)

    def remove_observer(self, callback):
        """Remove an observer callback.

        Raises ValueError if the callback is not an observer.
        """
        if callback not in self._observers:
            raise ValueError('{} is not an observer of {}'
                             .format(callback, self))
        self._observers.remove(callback)

    @contextlib.contextmanager
    def observing(self, callback):
        """Keep callback registered for the duration of a with block."""
        self.add_observer(callback)
        try:
            yield self
        finally:
            self.remove_observer(callback)

    def fire(self, *args, **kwargs):
        """Call every observer, in registration order, with the arguments."""
        self._fire_count += 1
        logger.debug('Fired {} ({} observers)'
                     .format(self, len(self._observers)))
        for observer in list(self._observers):
            observer(*args, **kwargs)

    def __repr__(self):
        return 'Event(\'{}\')'.format(self._name)
