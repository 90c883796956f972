"""This module includes the geometry methods used on the periodic domain [0, 2pi)^2"""

import math

import numpy as np
from scipy.spatial import cKDTree

period = 2 * math.pi

def torusDelta(point1, point2):
    """Returns the shortest displacement from point2 to point1, taking periodicity into account. Works on arrays of
    coordinates as well as on single values."""
    return np.mod(np.asarray(point1) - np.asarray(point2) + math.pi, period) - math.pi

def torusDistance(point1, point2):
    """Returns the distance between two points [x1, x2], [y1, y2] on the torus"""
    delta = torusDelta(point1, point2)
    return float(np.hypot(delta[0], delta[1]))

def bumpProfile(rho):
    """Returns the smooth bump exp(1 - 1/(1 - rho^2)), which is 1 at rho = 0 and vanishes with all of its derivatives
    at rho = 1. Zero for rho >= 1."""
    rho = np.asarray(rho, dtype=float)
    out = np.zeros_like(rho)
    inside = rho < 1
    out[inside] = np.exp(1 - 1 / (1 - rho[inside] ** 2))
    return out

def wrapPoints(points):
    """Maps an (m, 2) array of coordinates into [0, 2pi)"""
    wrapped = np.mod(np.asarray(points, dtype=float), period)
    # mod can round up to the period itself for tiny negative inputs
    wrapped[wrapped >= period] = 0
    return wrapped

def setDistance(points1, points2):
    """Returns the smallest distance between a point of one set and a point of the other on the torus"""
    tree = cKDTree(wrapPoints(points1), boxsize=period)
    dists, _ = tree.query(wrapPoints(points2))
    return float(np.min(dists))

def maxDistanceToSet(points, reference):
    """Returns how far the point of 'points' that is furthest from the reference set lies from it"""
    tree = cKDTree(wrapPoints(reference), boxsize=period)
    dists, _ = tree.query(wrapPoints(points))
    return float(np.max(dists))

def circularExtent(indices, n):
    """Returns the first index and length of the shortest run of consecutive (wrapping) indices on a ring of n that
    covers every index given."""
    occupied = np.unique(indices)
    if len(occupied) == n:
        return 0, n
    gaps = np.diff(np.append(occupied, occupied[0] + n))
    widest = int(np.argmax(gaps))
    start = int(occupied[(widest + 1) % len(occupied)])
    return start, n - int(gaps[widest]) + 1
