#pragma once

#include <stdexcept>
#include <string>

namespace plcsnet {

/// Base of every error the library raises.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text (bad number, wrong column count).
class ParseError : public Error {
public:
    using Error::Error;
};

/// Structurally invalid panel: duplicate entity, empty panel, missing header.
class SchemaError : public Error {
public:
    using Error::Error;
};

/// Gap in the period labels.
class ContiguityError : public Error {
public:
    using Error::Error;
};

/// Requested window does not fit inside the panel.
class BoundsError : public Error {
public:
    using Error::Error;
};

/// Caller violated a documented precondition.
class ContractError : public Error {
public:
    using Error::Error;
};

/// Cumulative MD has fewer than three usable log points (near-identical series).
class DegenerateSeriesError : public Error {
public:
    using Error::Error;
};

/// Constant series fed to Pearson.
class ZeroVarianceError : public Error {
public:
    using Error::Error;
};

/// No edges (or a disconnected node set) left after dropping degenerate pairs.
class EmptyGraphError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace plcsnet
