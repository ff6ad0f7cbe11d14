#pragma once

#include <stdexcept>
#include <string>

namespace carpose {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// geometry
struct BehindCameraError : Error {
  using Error::Error;
};
struct NonpositiveDepthError : Error {
  using Error::Error;
};
struct ZeroRayError : Error {
  using Error::Error;
};
struct GimbalDegenerateError : Error {
  using Error::Error;
};

// pnp
struct NoLabelledKeypointsError : Error {
  using Error::Error;
};
struct InsufficientCorrespondencesError : Error {
  using Error::Error;
};
struct DegenerateConfigurationError : Error {
  using Error::Error;
};
struct NoConsensusError : Error {
  using Error::Error;
};
struct NoModelAcceptedError : Error {
  using Error::Error;
};

// images / aggregation
struct EmptyMeshError : Error {
  using Error::Error;
};
struct EmptySilhouetteError : Error {
  using Error::Error;
};
struct EmptyMaskError : Error {
  using Error::Error;
};
struct ZeroAttentionMassError : Error {
  using Error::Error;
};

// evaluation
struct UnknownShapeError : Error {
  using Error::Error;
};
struct MixedImageIdError : Error {
  using Error::Error;
};

// simulation
struct PlacementFailureError : Error {
  using Error::Error;
};

// file I/O: message carries file/line/field context
struct ParseError : Error {
  using Error::Error;
};
struct SchemaError : Error {
  using Error::Error;
};
struct UnknownVersionError : SchemaError {
  using SchemaError::SchemaError;
};

}  // namespace carpose
