//! Independent numerical checks: finite-difference generators, sampled metrics,
//! gauge shifts, adiabatic ramps and quadrature actions.

pub mod action;
pub mod adiabatic;
pub mod gauge;
pub mod generators;

pub use action::{numeric_action_of_energy, MechanicalHamiltonian};
pub use adiabatic::{adiabatic_action_drift, adiabatic_action_drift_with, frozen_errors, rk4_step, RampSchedule};
pub use gauge::{gauge_invariance_experiment, GaugeShift};
pub use generators::{
    generator_displacement_check, numeric_metric, phase_space_derivatives, quartic_numeric_connection,
    quartic_numeric_metric, sample_generators,
};
