#include <cstdio>
int main() { std::puts("acceptance harness pending"); return 1; }
