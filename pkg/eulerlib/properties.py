"""This module includes properties, which are objects that contain different datatypes and enforce conditions on
them, such as allowed ranges. Unlike a plain dictionary of settings, a property rejects values that break its
conditions, and a collection of properties rejects keys it does not know, so that a run is never started from a
half-understood configuration."""

import math
import numbers


class Property():
    """The base class that properties inherit from. It associates a human-readable display name with the data, as well
    as a value type that it casts all inputs to."""
    def __init__(self, dispName, valueType):
        self.dispName = dispName
        self.valueType = valueType
        self.value = None

    def checkValue(self, value):
        """Raises a ValueError describing why 'value' can't be stored in this property. The message is a fragment
        like 'must be ≥ 0' that the owning collection prefixes with the setting's path."""

    def setValue(self, value):
        """Set the value of the property, casting if necessary"""
        self.checkValue(value)
        self.value = self.valueType(value)

    def getValue(self):
        """Returns the value of the property"""
        return self.value


def _isNumber(value):
    return isinstance(value, numbers.Real) and not isinstance(value, bool)


class FloatProperty(Property):
    """A property that handles floats. It forces the value to be in a certain range. The lower bound can be made
    exclusive for quantities that must be strictly positive."""
    def __init__(self, dispName, minValue, maxValue, minInclusive=True):
        super().__init__(dispName, float)
        self.min = minValue
        self.max = maxValue
        self.minInclusive = minInclusive
        self.value = float(minValue)

    def checkValue(self, value):
        if not _isNumber(value):
            raise ValueError('must be a number')
        if not math.isfinite(value):
            raise ValueError('must be finite')
        if self.minInclusive and value < self.min:
            raise ValueError('must be ≥ ' + str(self.min))
        if not self.minInclusive and value <= self.min:
            raise ValueError('must be > ' + str(self.min))
        if value > self.max:
            raise ValueError('must be ≤ ' + str(self.max))


class IntProperty(Property):
    """A property with an integer as the value that is limited to a certain range, and optionally to even values."""
    def __init__(self, dispName, minValue, maxValue, even=False):
        super().__init__(dispName, int)
        self.min = minValue
        self.max = maxValue
        self.even = even
        self.value = minValue

    def checkValue(self, value):
        if not isinstance(value, numbers.Integral) or isinstance(value, bool):
            raise ValueError('must be an integer')
        if self.even and value % 2 != 0:
            raise ValueError('must be even')
        if not self.min <= value <= self.max:
            raise ValueError('must be between ' + str(self.min) + ' and ' + str(self.max))


class BoolProperty(Property):
    """A property that holds a true/false switch."""
    def __init__(self, dispName):
        super().__init__(dispName, bool)
        self.value = False

    def checkValue(self, value):
        if not isinstance(value, bool):
            raise ValueError('must be true or false')


class EnumProperty(Property):
    """This property operates on strings, but only allows values from a list that is set when the property is
    defined"""
    def __init__(self, dispName, values):
        super().__init__(dispName, str)
        self.values = values
        self.value = self.values[0]

    def contains(self, value):
        """Checks if a value is in the allowed list"""
        return value in self.values

    def checkValue(self, value):
        if not self.contains(value):
            raise ValueError('must be one of ' + ', '.join(self.values))


class StringProperty(Property):
    """A property that works on the set of all strings"""
    def __init__(self, dispName):
        super().__init__(dispName, str)
        self.value = ''

    def checkValue(self, value):
        if not isinstance(value, str):
            raise ValueError('must be a string')


class FloatListProperty(Property):
    """A property holding a list of floats, each of which must respect the same range. The list may be required to
    have a minimum length."""
    def __init__(self, dispName, minValue, maxValue, minInclusive=True, minLength=0):
        super().__init__(dispName, list)
        self.element = FloatProperty(dispName, minValue, maxValue, minInclusive)
        self.minLength = minLength
        self.value = []

    def checkValue(self, value):
        if not isinstance(value, (list, tuple)):
            raise ValueError('must be a list')
        if len(value) < self.minLength:
            raise ValueError('must have at least ' + str(self.minLength) + ' entries')
        for entry in value:
            self.element.checkValue(entry)

    def setValue(self, value):
        self.checkValue(value)
        self.value = [float(entry) for entry in value]


class IntListProperty(FloatListProperty):
    """A property holding a list of integers, each in the same range."""
    def __init__(self, dispName, minValue, maxValue, minLength=0):
        super().__init__(dispName, minValue, maxValue, minLength=minLength)
        self.element = IntProperty(dispName, minValue, maxValue)

    def setValue(self, value):
        self.checkValue(value)
        self.value = [int(entry) for entry in value]


class TabularProperty(Property):
    """A property that is composed of a number of 'tabs', each of which is a property collection of its own."""
    def __init__(self, dispName, collection):
        super().__init__(dispName, list)
        self.collection = collection
        self.tabs = []

    def getValue(self):
        return [tab.getProperties() for tab in self.tabs]

    def setValue(self, value):
        if not isinstance(value, (list, tuple)):
            raise ValueError('must be a list')
        tabs = []
        for index, data in enumerate(value):
            if not isinstance(data, dict):
                raise ValueError('entry ' + str(index) + ' must be a mapping')
            tab = self.collection()
            tab.setProperties(data, '[' + str(index) + ']')
            tabs.append(tab)
        self.tabs = tabs


class PropertyCollection():
    """Holds a set of properties and allows batch operations on them through dictionaries"""
    def __init__(self):
        self.props = {}

    def setProperties(self, props, path=''):
        """Sets the value(s) of one of more properties at a time by passing in a dictionary of property names and
        values. Unknown names and invalid values raise a ValueError whose message starts with the dotted path of the
        offending setting, for instance 'solver.cfl must be ≤ 1'."""
        for prop in props.keys():
            qualified = path + '.' + prop if path else prop
            if prop not in self.props:
                raise ValueError(qualified + ' is not a recognized setting')
            try:
                self.props[prop].setValue(props[prop])
            except ValueError as err:
                message = str(err)
                # Nested collections already qualified their own message
                if isinstance(self.props[prop], TabularProperty) and message.startswith('['):
                    raise ValueError(qualified + message) from None
                raise ValueError(qualified + ' ' + message) from None

    def getProperties(self, props=None):
        """Get a dictionary of property names and values. The optional argument is a list of which properties are
        being requested. It defaults to None, which returns all properties."""
        if props is None:
            props = self.props.keys()
        return {k: self.props[k].getValue() for k in props}

    def getProperty(self, prop):
        """Returns the value of a specific property."""
        return self.props[prop].getValue()

    def setProperty(self, prop, value):
        """Set the value of a specific property"""
        self.setProperties({prop: value})
