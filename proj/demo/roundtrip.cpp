// Minimal library walkthrough: draw a dataset, build the five-layer
// logarithmic autoencoder, inspect one trace, and verify the whole thing.

#include <iostream>

#include "btn/btn.hpp"

int main() {
    const auto data = btn::random_dataset(16, 12, /*seed=*/7);
    const auto key = btn::make_key(data);
    const auto net = btn::build_auto5_log(data, key);

    const auto stats = btn::compute_stats(net);
    std::cout << "layer widths:";
    for (auto w : stats.widths) std::cout << " " << w;
    std::cout << "\nmiddle layer: " << *stats.middle_index << "\n\n";

    const auto& x = data.vectors[0];
    std::cout << "trace of " << x.to_string() << ":\n";
    for (const auto& act : btn::eval_network(net, x))
        std::cout << "  " << act.to_string() << "\n";

    const auto check = btn::is_perfect_autoencoder(net, data);
    std::cout << "\nperfect autoencoder: " << (check.passed() ? "yes" : "no")
              << "\n";
    return check.passed() ? 0 : 1;
}
