#pragma once

#include <stdexcept>
#include <string>

namespace johncut {

enum class Err {
  TooFewVertices,
  SelfIntersecting,
  DegenerateArea,
  InvalidEta,
  EmptyCurve,
  SegmentNotInPolygon,
  PointOutside,
  ChordOnBoundary,
  ChordExitsPolygon,
  ChordTouchesBoundaryInternally,
  ChordInvalid,
  NotConvex,
  AngleTooSharp,
  NotSemiconvexInput,
  IterationLimitExceeded,
  ConstructionFailed,
  CurveExitsPolygon,
  BallCoversDomain,
  NotAdjacent,
  SharedTooShort,
  TooManyHoles,
  SlitPlacementFailed,
  FrameConstructionFailed,
  UnknownKind,
  BadInput,
};

inline const char* err_name(Err e) {
  switch (e) {
    case Err::TooFewVertices: return "TooFewVertices";
    case Err::SelfIntersecting: return "SelfIntersecting";
    case Err::DegenerateArea: return "DegenerateArea";
    case Err::InvalidEta: return "InvalidEta";
    case Err::EmptyCurve: return "EmptyCurve";
    case Err::SegmentNotInPolygon: return "SegmentNotInPolygon";
    case Err::PointOutside: return "PointOutside";
    case Err::ChordOnBoundary: return "ChordOnBoundary";
    case Err::ChordExitsPolygon: return "ChordExitsPolygon";
    case Err::ChordTouchesBoundaryInternally: return "ChordTouchesBoundaryInternally";
    case Err::ChordInvalid: return "ChordInvalid";
    case Err::NotConvex: return "NotConvex";
    case Err::AngleTooSharp: return "AngleTooSharp";
    case Err::NotSemiconvexInput: return "NotSemiconvexInput";
    case Err::IterationLimitExceeded: return "IterationLimitExceeded";
    case Err::ConstructionFailed: return "ConstructionFailed";
    case Err::CurveExitsPolygon: return "CurveExitsPolygon";
    case Err::BallCoversDomain: return "BallCoversDomain";
    case Err::NotAdjacent: return "NotAdjacent";
    case Err::SharedTooShort: return "SharedTooShort";
    case Err::TooManyHoles: return "TooManyHoles";
    case Err::SlitPlacementFailed: return "SlitPlacementFailed";
    case Err::FrameConstructionFailed: return "FrameConstructionFailed";
    case Err::UnknownKind: return "UnknownKind";
    case Err::BadInput: return "BadInput";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& msg)
      : std::runtime_error(std::string(err_name(code)) + ": " + msg), code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

}  // namespace johncut
