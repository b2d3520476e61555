#pragma once

#include <stdexcept>
#include <string>

namespace renewal {

// Thrown when the adaptive integrator cannot reach the requested absolute
// error; callers may fall back to Monte Carlo estimation.
struct QuadratureFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Event count exceeded the hard cap before the horizon was reached.
struct HorizonOverflow : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct WindowBeyondHorizon : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BeyondLastEvent : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Point is neither in the continuous support nor an atom.
struct UnsupportedPoint : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Atom values admit no rational structure within the denominator cap.
struct SpanUndetectable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonZeroMeanNoise : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidMean : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace renewal
