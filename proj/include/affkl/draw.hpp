#pragma once

#include <map>
#include <string>

#include "affkl/alcoves.hpp"

namespace affkl {

enum class DrawFormat { Svg, Tikz };

struct DrawOptions {
  std::string region = "dominant";  // dominant | all
  int bound = 4;                    // |<bary, alpha_i^vee>| < bound
  // Terms joined by '+': restricted, fW-window(n), box(a,b,...), list(A=word;D=word;word)
  std::string shade;
  DrawFormat format = DrawFormat::Svg;
  std::map<ExtElem, std::string> inscriptions;  // text drawn inside alcoves
};

// Rank 2 only.
std::string draw_alcoves(const AlcoveModel& al, const DrawOptions& o);

}  // namespace affkl
