"""Tests for the observer hooks."""

import pytest

from qgenocchi import event


def test_event():
    e = event.Event('MyEvent')
    res = []
    a = lambda arg: res.append('a' + arg)
    b = lambda arg: res.append('b' + arg)
    e.add_observer(a)
    e.fire('1')
    e.add_observer(b)
    e.fire('2')
    e.remove_observer(a)
    e.fire('3')
    e.remove_observer(b)
    e.fire('4')
    assert res == ['a1', 'a2', 'b2', 'b3']
    assert e.fire_count == 4


def test_already_added():
    e = event.Event('MyEvent')
    a = lambda arg: None
    e.add_observer(a)
    with pytest.raises(ValueError):
        e.add_observer(a)


def test_remove_nonexistent():
    e = event.Event('MyEvent')
    with pytest.raises(ValueError):
        e.remove_observer(lambda arg: None)


def test_observing():
    e = event.Event('MyEvent')
    res = []
    with e.observing(res.append):
        e.fire(1)
    e.fire(2)
    assert res == [1]


def test_observer_removing_itself():
    e = event.Event('MyEvent')
    res = []

    def once(arg):
        res.append(arg)
        e.remove_observer(once)
    e.add_observer(once)
    e.fire(1)
    e.fire(2)
    assert res == [1]


def test_repr():
    assert repr(event.Event('SuiteRunner.on_report')) == \
        'Event(\'SuiteRunner.on_report\')'
