#include "ppx/puzzles/touring.hpp"

#include <algorithm>
#include <cstdlib>

#include "ppx/core/errors.hpp"

namespace ppx::touring {

bool TourState::visited(int site) const {
  return std::any_of(itinerary.begin(), itinerary.end(),
                     [site](const Visit& v) { return v.site == site; });
}

int travel_minutes(const Site& a, const Site& b) {
  return std::abs(a.avenue - b.avenue) + std::abs(a.street - b.street);
}

int day_start(std::span<const Site> sites) {
  if (sites.empty()) return 0;
  int earliest = sites.front().begin_hour;
  for (const Site& s : sites) earliest = std::min(earliest, s.begin_hour);
  return earliest * 60;
}

TourState start_tour(std::vector<Site> sites) {
  TourState tour;
  tour.clock = day_start(sites);
  tour.sites = std::move(sites);
  return tour;
}

Visit visit(TourState& tour, int site) {
  if (site < 0 || site >= static_cast<int>(tour.sites.size())) {
    fail(ErrorCode::IndexOutOfRange, "no site " + std::to_string(site + 1));
  }
  if (tour.visited(site)) fail(ErrorCode::InvalidMove, "site " + std::to_string(site + 1) + " already visited");
  const Site& s = tour.sites[static_cast<std::size_t>(site)];
  Visit v;
  v.site = site;
  v.arrival = tour.clock;
  if (tour.position) v.arrival += travel_minutes(tour.sites[static_cast<std::size_t>(*tour.position)], s);
  v.start = std::max(v.arrival, s.begin_hour * 60);
  v.counted = v.start + s.desired_minutes <= s.end_hour * 60;
  if (v.counted) {
    tour.clock = v.start + s.desired_minutes;
    tour.collected += s.value;
  } else {
    v.start = v.arrival;
    tour.clock = v.arrival;
  }
  tour.position = site;
  tour.itinerary.push_back(v);
  return v;
}

double tour_score(std::span<const Site> sites, std::span<const int> plan) {
  TourState tour = start_tour(std::vector<Site>(sites.begin(), sites.end()));
  for (int site : plan) visit(tour, site);
  return tour.collected;
}

std::vector<Site> generate(int num_sites, CounterRng& rng) {
  std::vector<Site> sites;
  for (int i = 0; i < num_sites; ++i) {
    Site s;
    s.avenue = static_cast<int>(rng.between(0, 99));
    s.street = static_cast<int>(rng.between(0, 99));
    s.desired_minutes = static_cast<int>(rng.between(30, 240));
    s.value = static_cast<double>(rng.between(1, 200));
    const int min_span = (s.desired_minutes + 59) / 60;
    s.begin_hour = static_cast<int>(rng.between(5, 14));
    s.end_hour = static_cast<int>(rng.between(std::min(23, s.begin_hour + min_span), 23));
    sites.push_back(s);
  }
  return sites;
}

}  // namespace ppx::touring
