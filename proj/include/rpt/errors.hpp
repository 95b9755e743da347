#ifndef RPT_ERRORS_HPP
#define RPT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rpt
{

// Root of the library's exception hierarchy. The CLI maps the three
// families below onto its exit codes.
class Error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

// Bad user input: malformed numbers, out-of-range parameters, invalid flags.
class ValidationError : public Error
{
  public:
    using Error::Error;
};

// Failures inside the series engine or the eigenvalue solver.
class EngineError : public Error
{
  public:
    using Error::Error;
};

// Failures of the trial-frequency optimisation.
class OptimizationError : public Error
{
  public:
    using Error::Error;
};

class DegenerateMinimum : public EngineError
{
  public:
    using EngineError::EngineError;
};

class IrrationalInExactMode : public EngineError
{
  public:
    using EngineError::EngineError;
};

class OrderingViolation : public EngineError
{
  public:
    using EngineError::EngineError;
};

class PoleAtOrigin : public EngineError
{
  public:
    using EngineError::EngineError;
};

class OrderOutOfRange : public EngineError
{
  public:
    using EngineError::EngineError;
};

class NoMinimum : public ValidationError
{
  public:
    using ValidationError::ValidationError;
};

class NumericOverflow : public EngineError
{
  public:
    using EngineError::EngineError;
};

class BracketFailure : public EngineError
{
  public:
    using EngineError::EngineError;
};

class NoConvergence : public EngineError
{
  public:
    using EngineError::EngineError;
};

class NoRootFound : public OptimizationError
{
  public:
    using OptimizationError::OptimizationError;
};

class DegenerateObjective : public OptimizationError
{
  public:
    using OptimizationError::OptimizationError;
};

} // namespace rpt

#endif
