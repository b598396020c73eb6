// Scripted external agent for harness tests.
//   first-legal          plays the first listed legal move
//   garbage              never sends a parseable move
//   garbage-then-legal N N unparseable replies per turn, then a legal move
//   hang                 stops answering at the first observation
//   crash N              plays N moves, then exits at the next observation
//   never-ready          exits before the ready message
//   slow S               sleeps S seconds before every move
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>
#include <thread>

namespace {

void send(const std::string& type, const nlohmann::json& payload) {
  std::cout << nlohmann::json{{"type", type}, {"payload", payload}}.dump() << std::endl;
}

std::string first_legal(const nlohmann::json& obs) {
  if (!obs.contains("legal_moves") || obs["legal_moves"].empty()) return "pass";
  return obs["legal_moves"][0].get<std::string>();
}

}  // namespace

int main(int argc, char** argv) {
  const std::string mode = argc > 1 ? argv[1] : "first-legal";
  const int arg = argc > 2 ? std::atoi(argv[2]) : 1;
  if (mode == "never-ready") return 3;

  int moves = 0;
  int garbage_left = 0;
  nlohmann::json last_obs;
  std::string line;
  while (std::getline(std::cin, line)) {
    const auto msg = nlohmann::json::parse(line, nullptr, false);
    if (msg.is_discarded()) return 4;
    const std::string type = msg.value("type", "");
    if (type == "match-init") {
      send("ready", nullptr);
    } else if (type == "observation") {
      if (mode == "hang") {
        for (;;) std::this_thread::sleep_for(std::chrono::hours(1));
      }
      if (mode == "crash" && moves >= arg) return 1;
      if (mode == "garbage") {
        std::cout << "I think the best move is obvious" << std::endl;
        continue;
      }
      last_obs = msg["payload"];
      if (mode == "garbage-then-legal" && arg > 0) {
        garbage_left = arg - 1;
        std::cout << "{\"type\": \"move\", \"payload\": \"???\"}" << std::endl;
        continue;
      }
      if (mode == "slow") std::this_thread::sleep_for(std::chrono::seconds(arg));
      send("move", first_legal(msg["payload"]));
      ++moves;
    } else if (type == "retry") {
      if (mode == "garbage") {
        std::cout << "still not a move" << std::endl;
      } else if (garbage_left > 0) {
        --garbage_left;
        std::cout << "not json" << std::endl;
      } else {
        send("move", first_legal(last_obs));
        ++moves;
      }
    } else if (type == "end") {
      return 0;
    }
  }
  return 0;
}
