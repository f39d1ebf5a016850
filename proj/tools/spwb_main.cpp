#include <cstdio>

int main() {
  std::puts("spwb: command-line interface not wired up yet");
  return 2;
}
