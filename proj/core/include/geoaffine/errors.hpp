#pragma once

#include <stdexcept>
#include <string>

namespace geoaffine {

// Base class for all domain errors raised by the geometry kernel.
class GeoaffineError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Tangent vector anchored at a point that does not match the operation's base.
class BaseMismatchError : public GeoaffineError {
public:
    using GeoaffineError::GeoaffineError;
};

// Sphere exponential asked to shoot past the cut locus.
class CutLocusExceededError : public GeoaffineError {
public:
    using GeoaffineError::GeoaffineError;
};

// Sphere log requested for a (near-)antipodal pair; no unique minimal geodesic.
class AntipodalPairError : public GeoaffineError {
public:
    using GeoaffineError::GeoaffineError;
};

class StepTooSmallError : public GeoaffineError {
public:
    using GeoaffineError::GeoaffineError;
};

class CoincidentPointsError : public GeoaffineError {
public:
    using GeoaffineError::GeoaffineError;
};

// Analytic partial derivatives required but not attached to the field.
class MissingPartialsError : public GeoaffineError {
public:
    using GeoaffineError::GeoaffineError;
};

class DegenerateTriangleError : public GeoaffineError {
public:
    using GeoaffineError::GeoaffineError;
};

// Rejection sampling exhausted its attempt budget without finding a member.
class EmptySublevelError : public GeoaffineError {
public:
    using GeoaffineError::GeoaffineError;
};

class UnsupportedDimensionError : public GeoaffineError {
public:
    using GeoaffineError::GeoaffineError;
};

} // namespace geoaffine
