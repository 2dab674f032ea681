from flaghodge.cli import main

main()
