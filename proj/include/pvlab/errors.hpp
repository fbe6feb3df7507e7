#pragma once

#include <stdexcept>
#include <string>

namespace pvlab {

// Base class for all domain errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// modarith
class NotInvertible : public Error { public: using Error::Error; };
class TooLarge : public Error { public: using Error::Error; };

// charsum / bounds
class PrincipalCharacter : public Error { public: using Error::Error; };
class NotPrimitive : public Error { public: using Error::Error; };
class EvenModulus : public Error { public: using Error::Error; };
class HypothesisViolated : public Error { public: using Error::Error; };

// window
class SupportTooWide : public Error { public: using Error::Error; };
class DegenerateRamp : public Error { public: using Error::Error; };
class ZeroFrequency : public Error { public: using Error::Error; };

// harness
class DegenerateDesign : public Error { public: using Error::Error; };
class ConfigError : public Error { public: using Error::Error; };
class IoError : public Error { public: using Error::Error; };

} // namespace pvlab
