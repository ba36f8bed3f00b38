#pragma once

#include <stdexcept>
#include <string>

namespace maxfock {

/// Fields, spaces or states defined on different grids / bases were combined.
class GridMismatch : public std::invalid_argument {
public:
    explicit GridMismatch(const std::string& what) : std::invalid_argument(what) {}
};

/// A negative power of the frequency operator was applied to a field with k=0 content.
class NegativePowerOnZeroMode : public std::domain_error {
public:
    explicit NegativePowerOnZeroMode(const std::string& what) : std::domain_error(what) {}
};

class ZeroModeRequest : public std::invalid_argument {
public:
    explicit ZeroModeRequest(const std::string& what) : std::invalid_argument(what) {}
};

class NyquistRequest : public std::invalid_argument {
public:
    explicit NyquistRequest(const std::string& what) : std::invalid_argument(what) {}
};

class ZeroStateFidelity : public std::domain_error {
public:
    explicit ZeroStateFidelity(const std::string& what) : std::domain_error(what) {}
};

/// A complex intermediate that must be real carried an imaginary part above threshold.
class ImaginaryResidue : public std::runtime_error {
public:
    explicit ImaginaryResidue(const std::string& what) : std::runtime_error(what) {}
};

class SupportTooLarge : public std::domain_error {
public:
    explicit SupportTooLarge(const std::string& what) : std::domain_error(what) {}
};

class FormatError : public std::runtime_error {
public:
    explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace maxfock
