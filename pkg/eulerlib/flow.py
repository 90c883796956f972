"""Contains the time integration of the transport equation d theta/dt + u.grad theta = 0 and the configuration that
controls it."""

import math

import numpy as np
from scipy import fft

from .properties import PropertyCollection, FloatProperty, IntProperty, BoolProperty, FloatListProperty
from .simResult import FlowResult, SimAlert, SimAlertLevel, SimAlertType
from .spectral import SpectralField
from .velocity import streamCoeffs, velocityFromVorticity
from .analysis import NormSpec, sobolevNorm, lpNorm, refinedMaximum
from .defaults import defaultSolverDict

speedFloor = 1e-12

class SolverConfig(PropertyCollection):
    """Contains the settings that control an integration. A fixed timestep of 0 means the step is chosen from the CFL
    condition each step."""
    def __init__(self, propDict=None):
        super().__init__()
        self.props['cfl'] = FloatProperty('CFL Number', 0, 1, minInclusive=False)
        self.props['dtMax'] = FloatProperty('Maximum Timestep', 0, 10, minInclusive=False)
        self.props['fixedDt'] = FloatProperty('Fixed Timestep', 0, 10)
        self.props['tEnd'] = FloatProperty('End Time', 0, 100, minInclusive=False)
        self.props['dealias'] = BoolProperty('Dealias')
        self.props['diagnosticStride'] = IntProperty('Diagnostic Stride', 1, 1000000)
        self.props['pList'] = FloatListProperty('Lebesgue Exponents', 1, 1e6)
        self.props['sList'] = FloatListProperty('Sobolev Indices', -10, 10)
        self.setProperties(defaultSolverDict())
        if propDict is not None:
            self.setProperties(propDict)

    def copy(self, changes=None):
        """Returns an independent copy, optionally with some settings changed"""
        out = SolverConfig(self.getProperties())
        if changes is not None:
            out.setProperties(changes)
        return out


class DiagnosticsRecord():
    """The diagnostics of a state at one time. linfTheta is the sup norm refined between grid points and linfGrid the
    largest grid value, which never exceeds it. lpTheta and hsTheta map each requested exponent to the norm."""
    def __init__(self, time, l2Theta, linfTheta, linfGrid, lpTheta, energy, hsTheta, maxSpeed):
        self.time = time
        self.l2Theta = l2Theta
        self.linfTheta = linfTheta
        self.linfGrid = linfGrid
        self.lpTheta = lpTheta
        self.energy = energy
        self.hsTheta = hsTheta
        self.maxSpeed = maxSpeed

    def isFinite(self):
        values = [self.l2Theta, self.linfTheta, self.linfGrid, self.energy, self.maxSpeed]
        values += list(self.lpTheta.values()) + list(self.hsTheta.values())
        return all(math.isfinite(value) for value in values)

    def getDict(self):
        return {
            'time': self.time,
            'l2Theta': self.l2Theta,
            'linfTheta': self.linfTheta,
            'linfGrid': self.linfGrid,
            'lpTheta': dict(self.lpTheta),
            'energy': self.energy,
            'hsTheta': dict(self.hsTheta),
            'maxSpeed': self.maxSpeed
        }


def _physical(coeffs):
    return fft.ifft2(coeffs, norm='forward').real

def _tendency(coeffs, symbol, drift, grid, dealiasOn):
    if dealiasOn:
        coeffs = coeffs * grid.dealiasMask
    psi = streamCoeffs(coeffs, symbol, grid)
    u1 = _physical(-grid.ik2 * psi) + drift[0]
    u2 = _physical(grid.ik1 * psi) + drift[1]
    advection = u1 * _physical(grid.ik1 * coeffs) + u2 * _physical(grid.ik2 * coeffs)
    if not np.all(np.isfinite(advection)):
        raise FloatingPointError('Non-finite values in the advection term')
    out = -fft.fft2(advection, norm='forward')
    if dealiasOn:
        out *= grid.dealiasMask
    return out

def rhsTendency(state, dealiasOn=True):
    """Returns the spectrum of -(u.grad theta) for a state. Both factors are computed in physical space from dealiased
    spectra and the product is dealiased again."""
    grid = state.grid
    return SpectralField(grid, _tendency(state.thetaHat.coeffs, state.multiplier.symbol(grid), state.drift, grid,
                                         dealiasOn))

def maxSpeed(state):
    """Returns the largest velocity magnitude on the grid, drift included"""
    u1, u2 = velocityFromVorticity(state)
    return float(np.max(np.hypot(u1.samples, u2.samples)))

def cflDt(state, config):
    """Returns the timestep to take from a state: the fixed timestep if one is set, otherwise the CFL step capped at
    dtMax."""
    fixedDt = config.getProperty('fixedDt')
    if fixedDt > 0:
        return fixedDt
    cflStep = config.getProperty('cfl') * state.grid.dx / max(maxSpeed(state), speedFloor)
    return min(config.getProperty('dtMax'), cflStep)

def stepRK4(state, dt, dealiasOn=True):
    """Advances a state by dt with the classical four-stage Runge-Kutta method. The drift is carried over unchanged."""
    if not dt > 0:
        raise ValueError('Timestep must be > 0, got ' + str(dt))
    grid = state.grid
    symbol = state.multiplier.symbol(grid)
    coeffs = state.thetaHat.coeffs

    def tendency(values):
        return _tendency(values, symbol, state.drift, grid, dealiasOn)

    k1 = tendency(coeffs)
    k2 = tendency(coeffs + 0.5 * dt * k1)
    k3 = tendency(coeffs + 0.5 * dt * k2)
    k4 = tendency(coeffs + dt * k3)
    updated = coeffs + (dt / 6) * (k1 + 2 * k2 + 2 * k3 + k4)
    if not np.all(np.isfinite(updated)):
        raise FloatingPointError('Non-finite coefficients after step')
    return state.withTheta(SpectralField(grid, updated), state.time + dt)

def conservedDiagnostics(state, pList=(4.0,), sList=(2.5,)):
    """Returns the norms, energy and peak speed of a state. The energy is 1/2 sum T(|k|^2) |theta_k|^2 / |k|^2."""
    grid = state.grid
    coeffs = state.thetaHat.coeffs
    power = np.abs(coeffs) ** 2
    theta = state.theta()
    return DiagnosticsRecord(
        time=state.time,
        l2Theta=math.sqrt(float(np.sum(power))),
        linfTheta=refinedMaximum(state.thetaHat),
        linfGrid=lpNorm(theta, math.inf),
        lpTheta={p: lpNorm(theta, p) for p in pList},
        energy=0.5 * float(np.sum(state.multiplier.symbol(grid) * power * grid.invKsq)),
        hsTheta={s: sobolevNorm(state.thetaHat, NormSpec(s)) for s in sList},
        maxSpeed=maxSpeed(state)
    )

def integrate(state0, config, probes=(), callback=None):
    """Integrates a state up to the configured end time and returns a FlowResult. Diagnostics are recorded at the
    start, every 'diagnosticStride' steps, at each probe time and at the end. Steps are shortened so that probe times
    are landed on exactly, and a snapshot of the state is kept for each probe. If a step produces non-finite values
    the run stops with an error alert and the last valid state. The callback, if given, is called after every step
    with the fraction of the run completed, and can cancel the run by returning True."""
    tEnd = config.getProperty('tEnd')
    stride = config.getProperty('diagnosticStride')
    dealiasOn = config.getProperty('dealias')
    pList = config.getProperty('pList')
    sList = config.getProperty('sList')

    probes = sorted(set(float(probe) for probe in probes))
    for probe in probes:
        if probe < 0 or probe > tEnd:
            raise ValueError('Probe time ' + str(probe) + ' is outside [0, ' + str(tEnd) + ']')
    if state0.time >= tEnd:
        raise ValueError('State at t = ' + str(state0.time) + ' is already past the end time')
    targets = [probe for probe in probes if probe > state0.time]
    if len(targets) == 0 or targets[-1] != tEnd:
        targets.append(tEnd)

    result = FlowResult(pList, sList)
    state = state0
    result.addRecord(conservedDiagnostics(state, pList, sList))
    if state.time in probes:
        result.snapshots[state.time] = state

    steps = 0
    targetIndex = 0
    while targetIndex < len(targets):
        target = targets[targetIndex]
        dt = cflDt(state, config)
        hit = state.time + dt >= target - 1e-6 * dt
        if hit:
            dt = target - state.time
        try:
            nextState = stepRK4(state, dt, dealiasOn)
            if hit:
                nextState.time = target
            record = None
            steps += 1
            if hit or steps % stride == 0:
                record = conservedDiagnostics(nextState, pList, sList)
                if not record.isFinite():
                    raise FloatingPointError('Non-finite diagnostics at t = ' + str(nextState.time))
        except FloatingPointError as err:
            desc = 'Integration aborted at t = ' + str(state.time) + ': ' + str(err)
            result.addAlert(SimAlert(SimAlertLevel.ERROR, SimAlertType.STABILITY, desc, 'Solver'))
            result.final = state
            result.steps = steps
            return result

        state = nextState
        if record is not None:
            result.addRecord(record)
        if hit:
            if target in probes:
                result.snapshots[target] = state
            targetIndex += 1

        if callback is not None and callback(state.time / tEnd):
            desc = 'Integration cancelled at t = ' + str(state.time)
            result.addAlert(SimAlert(SimAlertLevel.WARNING, SimAlertType.STABILITY, desc, 'Solver'))
            result.final = state
            result.steps = steps
            return result

    result.final = state
    result.steps = steps
    result.success = True
    return result
