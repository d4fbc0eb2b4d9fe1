#include <chrono>
#include <iostream>
#include <random>

#include "rab/words.hpp"

// Normal-form throughput on random words over the pentagon diagram.
int main(int argc, char** argv) {
  int letters = argc > 1 ? std::atoi(argv[1]) : 10000;
  int rounds = argc > 2 ? std::atoi(argv[2]) : 20;
  rab::Diagram d = rab::Diagram::from_indices(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  rab::GraphProduct G(d, {3, 3, 3, 3, 3});
  std::mt19937_64 rng(7);
  std::size_t total = 0, out_len = 0;
  auto start = std::chrono::steady_clock::now();
  for (int r = 0; r < rounds; ++r) {
    rab::Word w;
    for (int k = 0; k < letters; ++k)
      w.push_back({static_cast<rab::Type>(rng() % 5), 1 + static_cast<int>(rng() % 2)});
    out_len += G.normalize(w).size();
    total += w.size();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << "letters: " << total << "\nseconds: " << secs << "\nletters_per_second: " << total / secs
            << "\nmean_normal_length: " << out_len / rounds << "\n";
}
