#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ppx/core/rng.hpp"

namespace ppx::touring {

struct Site {
  int avenue = 0;
  int street = 0;
  int desired_minutes = 0;
  double value = 0.0;
  int begin_hour = 0;
  int end_hour = 0;
  bool operator==(const Site&) const = default;
};

// site is 0-based internally; nullopt ends the tour.
struct TourStep {
  std::optional<int> site;
  bool operator==(const TourStep&) const = default;
};

struct Visit {
  int site = 0;
  int arrival = 0;  // minutes since 00:00
  int start = 0;
  bool counted = false;
  bool operator==(const Visit&) const = default;
};

struct TourState {
  std::vector<Site> sites;
  std::vector<Visit> itinerary;
  int clock = 0;
  std::optional<int> position;
  double collected = 0.0;
  bool finished = false;

  bool visited(int site) const;
  bool operator==(const TourState&) const = default;
};

int travel_minutes(const Site& a, const Site& b);

// Earliest begin hour among the sites, in minutes.
int day_start(std::span<const Site> sites);

TourState start_tour(std::vector<Site> sites);

// Travels to `site` and visits it if the whole stay fits in its window
// (waiting for the window to open is allowed). A visit that cannot fit earns
// nothing and costs no visiting time; the tour continues from that site.
// Throws IndexOutOfRange / InvalidMove for unknown or repeated sites.
Visit visit(TourState& tour, int site);

// Value of a plan (0-based site order) simulated from the start of the day.
double tour_score(std::span<const Site> sites, std::span<const int> plan);

std::vector<Site> generate(int num_sites, CounterRng& rng);

}  // namespace ppx::touring
